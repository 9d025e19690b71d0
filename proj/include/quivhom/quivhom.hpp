#pragma once

// Umbrella header.

#include "quivhom/algebra.hpp"
#include "quivhom/emit.hpp"
#include "quivhom/extdim.hpp"
#include "quivhom/field.hpp"
#include "quivhom/homology.hpp"
#include "quivhom/kupisch.hpp"
#include "quivhom/matrix.hpp"
#include "quivhom/parse.hpp"
#include "quivhom/quiver.hpp"
#include "quivhom/report.hpp"
#include "quivhom/representation.hpp"
#include "quivhom/scan.hpp"
