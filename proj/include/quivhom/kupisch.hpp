#pragma once

// Nakayama algebras from Kupisch series and radical-square-zero algebras
// from arbitrary connected quivers.
//
// A Kupisch series lists the composition lengths c_i of the indecomposable
// projectives e_iA. Linear shape: quiver 1 -> 2 -> ... -> n with c_n = 1,
// c_i >= 2 and c_i <= c_{i+1}+1 for i < n. Cyclic shape: the cycle closed
// at n -> 1, all c_i >= 2 and c_i <= c_{i+1}+1 cyclically.

#include "quivhom/algebra.hpp"

namespace quivhom {

enum class KupischShape { Linear, Cyclic };

struct KupischSeries {
    KupischShape shape;
    std::vector<int> lengths;

    bool valid() const {
        const int n = (int)lengths.size();
        if (n == 0)
            return false;
        if (shape == KupischShape::Linear) {
            if (n < 2)
                return false; // n = 1 linear is the semisimple algebra k
            if (lengths[n - 1] != 1)
                return false;
            for (int i = 0; i + 1 < n; ++i)
                if (lengths[i] < 2 || lengths[i] > lengths[i + 1] + 1)
                    return false;
            return true;
        }
        for (int i = 0; i < n; ++i) {
            if (lengths[i] < 2)
                return false;
            if (lengths[i] > lengths[(i + 1) % n] + 1)
                return false;
        }
        return true;
    }

    std::string label() const {
        std::string s = shape == KupischShape::Linear ? "kupisch_linear[" : "kupisch_cyclic[";
        for (std::size_t i = 0; i < lengths.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(lengths[i]);
        }
        return s + "]";
    }
};

inline Algebra nakayama_from_kupisch(const PrimeField& field, const KupischSeries& k) {
    if (!k.valid())
        throw InvalidKupischError("series violates the Kupisch conditions: " + k.label());
    const int n = (int)k.lengths.size();
    std::vector<Arrow> arrows;
    const bool cyclic = k.shape == KupischShape::Cyclic;
    const int arrow_count = cyclic ? n : n - 1;
    for (int i = 0; i < arrow_count; ++i)
        arrows.push_back({i, i + 1, cyclic ? (i + 1) % n + 1 : i + 2, "a" + std::to_string(i + 1)});
    Quiver q(n, std::move(arrows));

    // one relation per vertex: the path of length c_i starting at i, when
    // the quiver has such a path
    std::vector<PathWord> relations;
    for (int i = 0; i < n; ++i) {
        const int len = k.lengths[i];
        if (!cyclic && i + len >= n)
            continue; // path of that length does not exist from vertex i+1
        PathWord w{i + 1, {}};
        for (int s = 0; s < len; ++s)
            w.arrows.push_back(cyclic ? (i + s) % n : i + s);
        relations.push_back(std::move(w));
    }
    int bound = 2;
    for (int c : k.lengths)
        bound = std::max(bound, c + 1);
    return build_monomial_algebra(field, q, std::move(relations), std::max(bound, n + 1));
}

inline Algebra radical_square_zero(const PrimeField& field, const Quiver& quiver) {
    if (!quiver.connected())
        throw NotConnectedError("quiver is not connected");
    if (quiver.arrow_count() == 0)
        throw NonSemisimpleError("radical square zero algebra needs at least one arrow");
    std::vector<PathWord> relations;
    for (const Arrow& a : quiver.arrows())
        for (const Arrow& b : quiver.arrows())
            if (a.target == b.source)
                relations.push_back(PathWord{a.source, {a.id, b.id}});
    return build_monomial_algebra(field, quiver, std::move(relations), 3);
}

} // namespace quivhom
