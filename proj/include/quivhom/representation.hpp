#pragma once

// Right modules over a bound quiver algebra as quiver representations:
// one GF(p) space per vertex and one matrix per arrow, acting on row
// vectors from the right. Every constructor validates that relation
// products vanish, so an ill-formed module cannot circulate.

#include "quivhom/algebra.hpp"
#include "quivhom/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quivhom {

class Representation {
public:
    Representation(Algebra alg, std::vector<int> dims, std::vector<Matrix> arrow_maps)
        : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(arrow_maps)) {
        validate();
    }

    static Representation zero(const Algebra& a) {
        std::vector<int> d(a.vertex_count(), 0);
        std::vector<Matrix> m;
        for (int i = 0; i < a.quiver().arrow_count(); ++i)
            m.push_back(Matrix(a.field(), 0, 0));
        return Representation(a, std::move(d), std::move(m));
    }

    const Algebra& algebra() const { return alg_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int vertex) const { return dims_.at(vertex - 1); }
    const Matrix& arrow_map(int arrow_id) const { return maps_.at(arrow_id); }
    const std::vector<Matrix>& arrow_maps() const { return maps_; }

    int total_dim() const {
        int t = 0;
        for (int d : dims_)
            t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    bool is_semisimple() const {
        for (const Matrix& m : maps_)
            if (!m.is_zero())
                return false;
        return true;
    }

    bool same_dims(const Representation& o) const { return dims_ == o.dims_; }

    bool operator==(const Representation& o) const {
        return alg_.same_presentation(o.alg_) && dims_ == o.dims_ && maps_ == o.maps_;
    }

private:
    void validate() const {
        const Quiver& q = alg_.quiver();
        if ((int)dims_.size() != q.vertex_count())
            throw std::invalid_argument("Representation: wrong dims length");
        for (int d : dims_)
            if (d < 0)
                throw std::invalid_argument("Representation: negative dimension");
        if ((int)maps_.size() != q.arrow_count())
            throw std::invalid_argument("Representation: wrong arrow map count");
        for (const Arrow& a : q.arrows()) {
            const Matrix& m = maps_[a.id];
            if (m.rows() != dims_[a.source - 1] || m.cols() != dims_[a.target - 1])
                throw std::invalid_argument("Representation: arrow map shape mismatch");
        }
        for (const PathWord& r : alg_.relations()) {
            Matrix prod = maps_[r.arrows[0]];
            for (std::size_t k = 1; k < r.arrows.size(); ++k)
                prod = prod * maps_[r.arrows[k]];
            if (!prod.is_zero())
                throw std::logic_error("Representation: relation " + r.spell(q) + " does not act by zero");
        }
    }

    Algebra alg_;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

// ---------------------------------------------------------------------------
// module homomorphisms

struct ModuleMap {
    Representation source;
    Representation target;
    std::vector<Matrix> vertex_maps; // f_v of shape dim_src(v) x dim_tgt(v)

    ModuleMap(Representation src, Representation tgt, std::vector<Matrix> maps)
        : source(std::move(src)), target(std::move(tgt)), vertex_maps(std::move(maps)) {
        validate();
    }

    void validate() const {
        const Quiver& q = source.algebra().quiver();
        if (!source.algebra().same_presentation(target.algebra()))
            throw std::invalid_argument("ModuleMap: modules over different algebras");
        if ((int)vertex_maps.size() != q.vertex_count())
            throw std::invalid_argument("ModuleMap: wrong vertex map count");
        for (int v = 1; v <= q.vertex_count(); ++v) {
            const Matrix& f = vertex_maps[v - 1];
            if (f.rows() != source.dim(v) || f.cols() != target.dim(v))
                throw std::invalid_argument("ModuleMap: vertex map shape mismatch");
        }
        for (const Arrow& a : q.arrows()) {
            // x (A_src f_v) = x (f_u A_tgt) for rows x at the source vertex
            Matrix lhs = source.arrow_map(a.id) * vertex_maps[a.target - 1];
            Matrix rhs = vertex_maps[a.source - 1] * target.arrow_map(a.id);
            if (!(lhs == rhs))
                throw std::logic_error("ModuleMap: square at arrow " + a.name + " does not commute");
        }
    }

    bool is_injective() const {
        for (int v = 1; v <= source.algebra().vertex_count(); ++v)
            if (vertex_maps[v - 1].rank() != source.dim(v))
                return false;
        return true;
    }
    bool is_surjective() const {
        for (int v = 1; v <= source.algebra().vertex_count(); ++v)
            if (vertex_maps[v - 1].rank() != target.dim(v))
                return false;
        return true;
    }
    bool is_isomorphism() const {
        return source.same_dims(target) && is_injective();
    }

    ModuleMap compose(const ModuleMap& then) const {
        std::vector<Matrix> maps;
        for (std::size_t v = 0; v < vertex_maps.size(); ++v)
            maps.push_back(vertex_maps[v] * then.vertex_maps[v]);
        return ModuleMap(source, then.target, std::move(maps));
    }
};

// ---------------------------------------------------------------------------
// standard modules

inline Representation simple(const Algebra& a, int vertex) {
    if (vertex < 1 || vertex > a.vertex_count())
        throw std::invalid_argument("simple: vertex out of range");
    std::vector<int> dims(a.vertex_count(), 0);
    dims[vertex - 1] = 1;
    std::vector<Matrix> maps;
    for (const Arrow& ar : a.quiver().arrows())
        maps.push_back(Matrix(a.field(), dims[ar.source - 1], dims[ar.target - 1]));
    return Representation(a, std::move(dims), std::move(maps));
}

namespace detail {

// Representation spanned by a set of basis paths, grouped by end vertex in
// basis order; `act` maps (basis index, arrow id) to a basis index or -1.
template <typename Act>
Representation path_module(const Algebra& a, const std::vector<int>& span, Act act) {
    const Quiver& q = a.quiver();
    const int n = q.vertex_count();
    std::vector<std::vector<int>> group(n + 1);
    std::vector<int> offset(a.dimension(), -1);
    for (int idx : span) {
        int v = a.path(idx).end_vertex(q);
        offset[idx] = (int)group[v].size();
        group[v].push_back(idx);
    }
    std::vector<int> dims(n);
    for (int v = 1; v <= n; ++v)
        dims[v - 1] = (int)group[v].size();
    std::vector<Matrix> maps;
    for (const Arrow& ar : q.arrows()) {
        Matrix m(a.field(), dims[ar.source - 1], dims[ar.target - 1]);
        for (int r = 0; r < dims[ar.source - 1]; ++r) {
            int t = act(group[ar.source][r], ar.id);
            if (t >= 0 && offset[t] >= 0)
                m.at(r, offset[t]) = 1;
        }
        maps.push_back(std::move(m));
    }
    return Representation(a, std::move(dims), std::move(maps));
}

} // namespace detail

inline Representation projective(const Algebra& a, int vertex) {
    if (vertex < 1 || vertex > a.vertex_count())
        throw std::invalid_argument("projective: vertex out of range");
    return detail::path_module(a, a.basis_from(vertex),
                               [&](int idx, int arrow) { return a.extend_by_arrow(idx, arrow); });
}

// J^k as a right module; k = 0 gives the regular module.
inline Representation radical_power_module(const Algebra& a, int k) {
    std::vector<int> span;
    for (int len = std::max(k, 0); len < (int)a.radical_layers().size(); ++len)
        for (int idx : a.radical_layers()[len])
            span.push_back(idx);
    std::sort(span.begin(), span.end());
    return detail::path_module(a, span,
                               [&](int idx, int arrow) { return a.extend_by_arrow(idx, arrow); });
}

// J^k / J^l for k < l; for l = k+1 the result is semisimple.
inline Representation radical_layer_quotient(const Algebra& a, int k, int l) {
    if (k < 0 || l <= k)
        throw std::invalid_argument("radical_layer_quotient: need 0 <= k < l");
    std::vector<int> span;
    for (int len = k; len < std::min(l, (int)a.radical_layers().size()); ++len)
        for (int idx : a.radical_layers()[len])
            span.push_back(idx);
    std::sort(span.begin(), span.end());
    return detail::path_module(a, span, [&](int idx, int arrow) {
        int t = a.extend_by_arrow(idx, arrow);
        if (t < 0 || a.path(t).length() >= l)
            return -1;
        return t;
    });
}

// Vector space duality: a right module over A becomes one over opposite(A);
// the map of the reversed arrow is the transpose.
inline Representation dual(const Representation& m) {
    Algebra op = opposite(m.algebra());
    std::vector<Matrix> maps;
    for (const Matrix& mat : m.arrow_maps())
        maps.push_back(mat.transpose());
    return Representation(op, m.dims(), std::move(maps));
}

inline Representation injective(const Algebra& a, int vertex) {
    if (vertex < 1 || vertex > a.vertex_count())
        throw std::invalid_argument("injective: vertex out of range");
    Representation p = projective(opposite(a), vertex);
    // re-home the dual over a itself rather than opposite(opposite(a))
    std::vector<Matrix> maps;
    for (const Matrix& mat : p.arrow_maps())
        maps.push_back(mat.transpose());
    return Representation(a, p.dims(), std::move(maps));
}

inline Representation direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty())
        throw std::invalid_argument("direct_sum: empty list");
    const Algebra& a = parts[0].algebra();
    const int n = a.vertex_count();
    std::vector<int> dims(n, 0);
    for (const Representation& r : parts) {
        if (!r.algebra().same_presentation(a))
            throw std::invalid_argument("direct_sum: algebra mismatch");
        for (int v = 0; v < n; ++v)
            dims[v] += r.dims()[v];
    }
    std::vector<Matrix> maps;
    for (const Arrow& ar : a.quiver().arrows()) {
        Matrix m(a.field(), dims[ar.source - 1], dims[ar.target - 1]);
        int roff = 0, coff = 0;
        for (const Representation& r : parts) {
            const Matrix& blk = r.arrow_map(ar.id);
            for (int i = 0; i < blk.rows(); ++i)
                for (int j = 0; j < blk.cols(); ++j)
                    m.at(roff + i, coff + j) = blk.at(i, j);
            roff += blk.rows();
            coff += blk.cols();
        }
        maps.push_back(std::move(m));
    }
    return Representation(a, std::move(dims), std::move(maps));
}

// ---------------------------------------------------------------------------
// top and socle

namespace detail {

// Row space of M*J at each vertex: rows of all arrow maps arriving there.
inline Matrix radical_rows(const Representation& m, int vertex) {
    const Algebra& a = m.algebra();
    Matrix stack(a.field(), 0, m.dim(vertex));
    for (const Arrow& ar : a.quiver().arrows())
        if (ar.target == vertex)
            stack = stack.vstack(m.arrow_map(ar.id));
    return stack;
}

inline Representation semisimple_of_dims(const Algebra& a, std::vector<int> dims) {
    std::vector<Matrix> maps;
    for (const Arrow& ar : a.quiver().arrows())
        maps.push_back(Matrix(a.field(), dims[ar.source - 1], dims[ar.target - 1]));
    return Representation(a, std::move(dims), std::move(maps));
}

} // namespace detail

inline Representation top(const Representation& m) {
    if (m.is_zero())
        throw ZeroModuleError("top of the zero module");
    const int n = m.algebra().vertex_count();
    std::vector<int> dims(n);
    for (int v = 1; v <= n; ++v)
        dims[v - 1] = m.dim(v) - detail::radical_rows(m, v).rank();
    return detail::semisimple_of_dims(m.algebra(), std::move(dims));
}

inline Representation socle(const Representation& m) {
    if (m.is_zero())
        throw ZeroModuleError("socle of the zero module");
    const Algebra& a = m.algebra();
    const int n = a.vertex_count();
    std::vector<int> dims(n);
    for (int v = 1; v <= n; ++v) {
        Matrix out(a.field(), m.dim(v), 0);
        for (const Arrow& ar : a.quiver().arrows())
            if (ar.source == v)
                out = out.hstack(m.arrow_map(ar.id));
        dims[v - 1] = m.dim(v) - out.rank();
    }
    return detail::semisimple_of_dims(a, std::move(dims));
}

// ---------------------------------------------------------------------------
// Hom spaces and isomorphism testing

struct HomSpace {
    int dimension;
    std::vector<ModuleMap> basis;
};

inline HomSpace hom_space(const Representation& m, const Representation& n) {
    const Algebra& a = m.algebra();
    if (!a.same_presentation(n.algebra()))
        throw std::invalid_argument("hom_space: algebra mismatch");
    const Quiver& q = a.quiver();
    const int nv = q.vertex_count();

    std::vector<int> off(nv + 1, 0);
    for (int v = 1; v <= nv; ++v)
        off[v] = off[v - 1] + m.dim(v) * n.dim(v);
    const int unknowns = off[nv];
    auto slot = [&](int v, int r, int c) { return off[v - 1] + r * n.dim(v) + c; };

    int eqs = 0;
    for (const Arrow& ar : q.arrows())
        eqs += m.dim(ar.source) * n.dim(ar.target);
    Matrix sys(a.field(), eqs, unknowns);
    const PrimeField& F = a.field();
    int row = 0;
    for (const Arrow& ar : q.arrows()) {
        const Matrix& Am = m.arrow_map(ar.id); // m.dim(src) x m.dim(tgt)
        const Matrix& An = n.arrow_map(ar.id); // n.dim(src) x n.dim(tgt)
        for (int r = 0; r < m.dim(ar.source); ++r) {
            for (int c = 0; c < n.dim(ar.target); ++c) {
                // sum_k Am[r,k] f_tgt[k,c] - sum_k f_src[r,k] An[k,c] = 0
                for (int k = 0; k < m.dim(ar.target); ++k) {
                    int s = slot(ar.target, k, c);
                    sys.at(row, s) = F.add(sys.at(row, s), Am.at(r, k));
                }
                for (int k = 0; k < n.dim(ar.source); ++k) {
                    int s = slot(ar.source, r, k);
                    sys.at(row, s) = F.sub(sys.at(row, s), An.at(k, c));
                }
                ++row;
            }
        }
    }
    Matrix ker = sys.kernel_basis();
    HomSpace hs{ker.rows(), {}};
    for (int b = 0; b < ker.rows(); ++b) {
        std::vector<Matrix> maps;
        for (int v = 1; v <= nv; ++v) {
            Matrix f(F, m.dim(v), n.dim(v));
            for (int r = 0; r < m.dim(v); ++r)
                for (int c = 0; c < n.dim(v); ++c)
                    f.at(r, c) = ker.at(b, slot(v, r, c));
            maps.push_back(std::move(f));
        }
        hs.basis.push_back(ModuleMap(m, n, std::move(maps)));
    }
    return hs;
}

enum class Iso { Yes, No, Inconclusive };

struct IsoResult {
    Iso verdict;
    std::optional<ModuleMap> witness;
};

// Searches the Hom space for an invertible element: exhaustively when
// p^dim(Hom) <= 4096, otherwise 256 seeded random samples. A witness
// certifies Yes; exhaustion certifies No only in the exhaustive regime.
inline IsoResult is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
    if (!m.algebra().same_presentation(n.algebra()))
        throw std::invalid_argument("is_isomorphic: algebra mismatch");
    if (!m.same_dims(n))
        return {Iso::No, std::nullopt};
    if (m.is_zero())
        return {Iso::Yes, std::nullopt};

    HomSpace hs = hom_space(m, n);
    if (hs.dimension == 0)
        return {Iso::No, std::nullopt};

    const PrimeField& F = m.algebra().field();
    const int nv = m.algebra().vertex_count();
    auto try_combination = [&](const std::vector<std::uint32_t>& coeff) -> std::optional<ModuleMap> {
        std::vector<Matrix> maps;
        for (int v = 1; v <= nv; ++v) {
            Matrix f(F, m.dim(v), n.dim(v));
            for (int b = 0; b < hs.dimension; ++b) {
                if (!coeff[b])
                    continue;
                const Matrix& g = hs.basis[b].vertex_maps[v - 1];
                for (int r = 0; r < f.rows(); ++r)
                    for (int c = 0; c < f.cols(); ++c)
                        f.at(r, c) = F.add(f.at(r, c), F.mul(coeff[b], g.at(r, c)));
            }
            if (f.rank() != m.dim(v))
                return std::nullopt;
            maps.push_back(std::move(f));
        }
        return ModuleMap(m, n, std::move(maps));
    };

    double combos = 1;
    for (int b = 0; b < hs.dimension && combos <= 4096; ++b)
        combos *= F.prime();
    if (combos <= 4096) {
        std::vector<std::uint32_t> coeff(hs.dimension, 0);
        while (true) {
            int pos = 0;
            while (pos < hs.dimension && coeff[pos] + 1 == F.prime()) {
                coeff[pos] = 0;
                ++pos;
            }
            if (pos == hs.dimension)
                break;
            ++coeff[pos];
            if (auto w = try_combination(coeff))
                return {Iso::Yes, std::move(w)};
        }
        return {Iso::No, std::nullopt};
    }

    std::uint64_t state = seed ^ 0xa02bdbf7bb3c0a7ull;
    for (int it = 0; it < 256; ++it) {
        std::vector<std::uint32_t> coeff(hs.dimension);
        bool nonzero = false;
        for (int b = 0; b < hs.dimension; ++b) {
            coeff[b] = (std::uint32_t)(splitmix64(state) % F.prime());
            nonzero |= coeff[b] != 0;
        }
        if (!nonzero)
            continue;
        if (auto w = try_combination(coeff))
            return {Iso::Yes, std::move(w)};
    }
    return {Iso::Inconclusive, std::nullopt};
}

// ---------------------------------------------------------------------------
// projective covers and injective envelopes

struct ProjectiveCover {
    Representation module;            // the covered module
    Representation cover_module;      // direct sum of indecomposable projectives
    ModuleMap cover;                  // surjection cover_module -> module
    std::vector<int> multiplicities;  // copies of P_i, per vertex
    std::vector<std::vector<int>> generator_coords; // per vertex: block generator positions
};

namespace detail {

inline Matrix path_action_row(const Representation& m, const Matrix& u, const PathWord& p) {
    Matrix cur = u;
    for (int id : p.arrows)
        cur = cur * m.arrow_map(id);
    return cur;
}

} // namespace detail

inline ProjectiveCover projective_cover(const Representation& m) {
    if (m.is_zero())
        throw ZeroModuleError("projective cover of the zero module");
    const Algebra& a = m.algebra();
    const Quiver& q = a.quiver();
    const PrimeField& F = a.field();
    const int n = q.vertex_count();

    // lift generators: unit vectors at the non-pivot columns of rref(M*J)
    std::vector<std::vector<Matrix>> gens(n + 1); // per vertex, row vectors in M_v
    std::vector<int> mult(n, 0);
    for (int v = 1; v <= n; ++v) {
        auto [r, pivots] = detail::radical_rows(m, v).rref();
        std::vector<bool> is_pivot(m.dim(v), false);
        for (int p : pivots)
            is_pivot[p] = true;
        for (int c = 0; c < m.dim(v); ++c) {
            if (is_pivot[c])
                continue;
            Matrix u(F, 1, m.dim(v));
            u.at(0, c) = 1;
            gens[v].push_back(std::move(u));
        }
        mult[v - 1] = (int)gens[v].size();
    }

    // layout of P = sum over blocks (vertex v, copy k): at each vertex w the
    // coordinates of a block are the normal paths v ~> w in basis order
    struct Block {
        int vertex;
        const Matrix* gen;
        std::vector<std::vector<int>> paths; // per end vertex: basis indices
    };
    std::vector<Block> blocks;
    for (int v = 1; v <= n; ++v) {
        for (const Matrix& u : gens[v]) {
            Block b{v, &u, std::vector<std::vector<int>>(n + 1)};
            for (int idx : a.basis_from(v))
                b.paths[a.path(idx).end_vertex(q)].push_back(idx);
            blocks.push_back(std::move(b));
        }
    }

    std::vector<int> pdims(n, 0);
    std::vector<std::vector<int>> gen_coords(n + 1);
    std::vector<std::vector<int>> block_offset(blocks.size(), std::vector<int>(n + 1, 0));
    for (int w = 1; w <= n; ++w) {
        int off = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            block_offset[b][w] = off;
            if (blocks[b].vertex == w)
                gen_coords[w].push_back(off); // e_v is first in the v ~> v group
            off += (int)blocks[b].paths[w].size();
        }
        pdims[w - 1] = off;
    }

    // arrow maps of P: block diagonal right concatenation on paths
    std::vector<Matrix> pmaps;
    for (const Arrow& ar : q.arrows()) {
        Matrix mat(F, pdims[ar.source - 1], pdims[ar.target - 1]);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& src_paths = blocks[b].paths[ar.source];
            const auto& tgt_paths = blocks[b].paths[ar.target];
            for (std::size_t r = 0; r < src_paths.size(); ++r) {
                int t = a.extend_by_arrow(src_paths[r], ar.id);
                if (t < 0)
                    continue;
                auto it = std::lower_bound(tgt_paths.begin(), tgt_paths.end(), t);
                if (it == tgt_paths.end() || *it != t)
                    throw std::logic_error("projective_cover: path extension left its block");
                mat.at(block_offset[b][ar.source] + (int)r,
                       block_offset[b][ar.target] + (int)(it - tgt_paths.begin())) = 1;
            }
        }
        pmaps.push_back(std::move(mat));
    }
    Representation P(a, pdims, std::move(pmaps));

    // cover map: the block generator goes to its lift, a path p acts on it
    std::vector<Matrix> fmaps;
    for (int w = 1; w <= n; ++w) {
        Matrix f(F, pdims[w - 1], m.dim(w));
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& paths = blocks[b].paths[w];
            for (std::size_t r = 0; r < paths.size(); ++r) {
                Matrix img = detail::path_action_row(m, *blocks[b].gen, a.path(paths[r]));
                for (int c = 0; c < m.dim(w); ++c)
                    f.at(block_offset[b][w] + (int)r, c) = img.at(0, c);
            }
        }
        fmaps.push_back(std::move(f));
    }
    ModuleMap cover(P, m, std::move(fmaps));
    if (!cover.is_surjective())
        throw std::logic_error("projective_cover: cover map is not surjective");
    return ProjectiveCover{m, std::move(P), std::move(cover), std::move(mult), std::move(gen_coords)};
}

struct InjectiveEnvelope {
    Representation envelope;
    ModuleMap embedding;
    std::vector<int> multiplicities; // copies of I_i, per vertex
};

inline InjectiveEnvelope injective_envelope(const Representation& m) {
    if (m.is_zero())
        throw ZeroModuleError("injective envelope of the zero module");
    const Algebra& a = m.algebra();
    ProjectiveCover cd = projective_cover(dual(m));
    // dual the cover back over a itself
    std::vector<Matrix> emaps;
    for (const Matrix& mat : cd.cover_module.arrow_maps())
        emaps.push_back(mat.transpose());
    Representation envelope(a, cd.cover_module.dims(), std::move(emaps));
    std::vector<Matrix> fmaps;
    for (const Matrix& f : cd.cover.vertex_maps)
        fmaps.push_back(f.transpose());
    ModuleMap embedding(m, envelope, std::move(fmaps));
    if (!embedding.is_injective())
        throw std::logic_error("injective_envelope: embedding is not injective");
    return InjectiveEnvelope{std::move(envelope), std::move(embedding), std::move(cd.multiplicities)};
}

} // namespace quivhom
