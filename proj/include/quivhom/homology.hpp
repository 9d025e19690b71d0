#pragma once

// Syzygies, minimal projective resolutions, projective/injective/global
// dimension and structural predicates.
//
// Two infinity detectors, per the monomial structure of the algebras:
//
//  * the path syzygy graph. For a normal path p, the kernel of the cover
//    e_{t(p)}A ->> pA is the direct sum of qA over the minimal normal
//    continuations q of p (shortest q with pq = 0 and p q' != 0 for every
//    proper prefix q'). So pd(pA) is the longest successor-path length from
//    p, infinite exactly when p reaches a cycle. Radicals of simples are
//    sums of arrow modules aA, which ties gldim to the same graph. Exact,
//    no truncation.
//
//  * syzygy periodicity for arbitrary modules: the cover/kernel iteration
//    remembers all syzygies and certifies infinity when one recurs up to
//    isomorphism. Inconclusive isomorphism tests never certify.
//
// When neither fires within the cap (or the syzygies outgrow the dimension
// budget), the honest answer is the lower bound AtLeast.

#include "quivhom/extdim.hpp"
#include "quivhom/representation.hpp"

#include <map>

namespace quivhom {

// ---------------------------------------------------------------------------
// path syzygy graph

class PathSyzygyGraph {
public:
    // non-owning: the graph is cached inside the algebra it describes and
    // never outlives it
    explicit PathSyzygyGraph(const Algebra& a) : data_(a.data().get()) {
        build_edges();
        analyze();
    }

    const std::vector<std::vector<int>>& successors() const { return succ_; }

    // pd of the path module pA for a basis path p
    ExtDim pd_of_path(int basis_index) const {
        if (reaches_cycle_[basis_index])
            return ExtDim::infinite(cycle_certificate(basis_index));
        return ExtDim::finite(longest_[basis_index]);
    }

    // pd of the simple at a vertex: 0 at a sink, else 1 + max over the
    // arrow modules aA with a leaving the vertex
    ExtDim pd_of_simple(int vertex) const {
        ExtDim best = ExtDim::neg_infinity();
        bool any = false;
        for (int id : data_->quiver.arrows_from(vertex)) {
            any = true;
            int node = path_index(PathWord{vertex, {id}});
            if (reaches_cycle_[node])
                return ExtDim::infinite(cycle_certificate(node));
            best = extdim_max(best, ExtDim::finite(longest_[node]));
        }
        if (!any)
            return ExtDim::finite(0);
        return ExtDim::finite(best.finite_value() + 1);
    }

    // exact global dimension: max over simples
    ExtDim global_dimension() const {
        ExtDim g = ExtDim::neg_infinity();
        for (int v = 1; v <= data_->quiver.vertex_count(); ++v) {
            ExtDim d = pd_of_simple(v);
            if (d.is_infinite())
                return d;
            g = extdim_max(g, d);
        }
        return g;
    }

private:
    void build_edges() {
        const Quiver& q = data_->quiver;
        const int count = (int)data_->basis.size();
        succ_.assign(count, {});
        for (int node = 0; node < count; ++node) {
            const PathWord& p = data_->basis[node];
            // DFS over continuation words; all proper prefixes stay normal,
            // so only relation suffixes can newly appear
            struct Frame {
                std::vector<int> word;
                int end;
            };
            std::vector<Frame> stack;
            for (int id : q.arrows_from(p.end_vertex(q)))
                stack.push_back({{id}, q.arrow(id).target});
            std::vector<int>& out = succ_[node];
            while (!stack.empty()) {
                Frame f = std::move(stack.back());
                stack.pop_back();
                std::vector<int> whole = p.arrows;
                whole.insert(whole.end(), f.word.begin(), f.word.end());
                bool whole_dead = false, word_dead = false;
                for (const PathWord& r : data_->relations) {
                    if (!whole_dead && has_suffix(whole, r.arrows))
                        whole_dead = true;
                    if (!word_dead && has_suffix(f.word, r.arrows))
                        word_dead = true;
                }
                if (whole_dead) {
                    if (!word_dead)
                        out.push_back(path_index(PathWord{p.end_vertex(q), f.word}));
                    continue;
                }
                for (int id : q.arrows_from(f.end))
                    stack.push_back({[&] {
                                         auto w = f.word;
                                         w.push_back(id);
                                         return w;
                                     }(),
                                     q.arrow(id).target});
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
    }

    void analyze() {
        const int count = (int)succ_.size();
        // iterative Tarjan
        comp_.assign(count, -1);
        std::vector<int> low(count, -1), num(count, -1), stck;
        std::vector<bool> on_stack(count, false);
        int timer = 0, comps = 0;
        struct Frame {
            int v;
            std::size_t i;
        };
        for (int root = 0; root < count; ++root) {
            if (num[root] >= 0)
                continue;
            std::vector<Frame> call{{root, 0}};
            num[root] = low[root] = timer++;
            stck.push_back(root);
            on_stack[root] = true;
            while (!call.empty()) {
                Frame& f = call.back();
                if (f.i < succ_[f.v].size()) {
                    int w = succ_[f.v][f.i++];
                    if (num[w] < 0) {
                        num[w] = low[w] = timer++;
                        stck.push_back(w);
                        on_stack[w] = true;
                        call.push_back({w, 0});
                    } else if (on_stack[w]) {
                        low[f.v] = std::min(low[f.v], num[w]);
                    }
                } else {
                    if (low[f.v] == num[f.v]) {
                        int w;
                        do {
                            w = stck.back();
                            stck.pop_back();
                            on_stack[w] = false;
                            comp_[w] = comps;
                        } while (w != f.v);
                        ++comps;
                    }
                    int v = f.v;
                    call.pop_back();
                    if (!call.empty())
                        low[call.back().v] = std::min(low[call.back().v], low[v]);
                }
            }
        }
        // a node lies on a cycle iff its SCC is nontrivial or it has a self-loop
        std::vector<int> comp_size(comps, 0);
        for (int v = 0; v < count; ++v)
            ++comp_size[comp_[v]];
        on_cycle_.assign(count, false);
        for (int v = 0; v < count; ++v) {
            if (comp_size[comp_[v]] > 1)
                on_cycle_[v] = true;
            for (int w : succ_[v])
                if (w == v)
                    on_cycle_[v] = true;
        }
        // Tarjan numbers components in reverse topological order: every edge
        // goes to an equal or smaller component id
        reaches_cycle_.assign(count, false);
        longest_.assign(count, 0);
        std::vector<std::vector<int>> by_comp(comps);
        for (int v = 0; v < count; ++v)
            by_comp[comp_[v]].push_back(v);
        for (int c = 0; c < comps; ++c) {
            for (int v : by_comp[c]) {
                bool reach = on_cycle_[v];
                int far = 0;
                for (int w : succ_[v]) {
                    reach = reach || reaches_cycle_[w];
                    if (!reaches_cycle_[w])
                        far = std::max(far, longest_[w] + 1);
                }
                reaches_cycle_[v] = reach;
                longest_[v] = far;
            }
        }
    }

    InfinityCertificate cycle_certificate(int from) const {
        // walk toward a cyclic component, then inside it until a node repeats
        int v = from;
        while (!on_cycle_[v]) {
            for (int w : succ_[v]) {
                if (reaches_cycle_[w]) {
                    v = w;
                    break;
                }
            }
        }
        std::vector<int> walk;
        std::map<int, std::size_t> seen;
        while (seen.find(v) == seen.end()) {
            seen[v] = walk.size();
            walk.push_back(v);
            int next = -1;
            for (int w : succ_[v]) {
                if (w == v || comp_[w] == comp_[v]) {
                    next = w;
                    break;
                }
            }
            v = next; // a node on a cycle always has an in-component successor
        }
        PathCycleCertificate cert;
        for (std::size_t i = seen[v]; i < walk.size(); ++i)
            cert.cycle.push_back(data_->basis[walk[i]].spell(data_->quiver));
        return cert;
    }

    int path_index(const PathWord& w) const {
        auto it = data_->index.find({w.start_vertex, w.arrows});
        return it == data_->index.end() ? -1 : it->second;
    }

    const detail::AlgebraData* data_;
    std::vector<std::vector<int>> succ_;
    std::vector<int> comp_;
    std::vector<bool> on_cycle_;
    std::vector<bool> reaches_cycle_;
    std::vector<int> longest_;
};

inline const PathSyzygyGraph& path_syzygy_graph(const Algebra& a) {
    std::call_once(a.data()->graph_once, [&] {
        a.data()->syzygy_graph =
            std::shared_ptr<const void>(std::make_shared<const PathSyzygyGraph>(a));
    });
    return *static_cast<const PathSyzygyGraph*>(a.data()->syzygy_graph.get());
}

// ---------------------------------------------------------------------------
// syzygies

struct SyzygyData {
    ProjectiveCover cover;
    Representation syzygy;
    ModuleMap inclusion; // syzygy -> cover_module, rows are the kernel basis
};

inline SyzygyData syzygy_step(const Representation& m) {
    ProjectiveCover pc = projective_cover(m);
    const Algebra& a = m.algebra();
    const int n = a.vertex_count();

    std::vector<Matrix> bases;
    std::vector<int> kdims(n, 0);
    for (int v = 1; v <= n; ++v) {
        Matrix b = pc.cover.vertex_maps[v - 1].transpose().kernel_basis();
        // minimality: the kernel must avoid every block generator coordinate
        for (int r = 0; r < b.rows(); ++r)
            for (int g : pc.generator_coords[v])
                if (b.at(r, g) != 0)
                    throw std::logic_error("syzygy_step: kernel escapes the radical of the cover");
        kdims[v - 1] = b.rows();
        bases.push_back(std::move(b));
    }
    std::vector<Matrix> kmaps;
    for (const Arrow& ar : a.quiver().arrows()) {
        // solve K_a * B_tgt = B_src * P_a row by row
        Matrix rhs = bases[ar.source - 1] * pc.cover_module.arrow_map(ar.id);
        auto sol = bases[ar.target - 1].transpose().solve_right(rhs.transpose());
        if (!sol)
            throw std::logic_error("syzygy_step: kernel is not arrow-stable");
        kmaps.push_back(sol->transpose());
    }
    Representation K(a, kdims, std::move(kmaps));
    ModuleMap incl(K, pc.cover_module, std::move(bases));
    return SyzygyData{std::move(pc), std::move(K), std::move(incl)};
}

inline Representation syzygy(const Representation& m) {
    if (m.is_zero())
        throw ZeroModuleError("syzygy of the zero module");
    return syzygy_step(m).syzygy;
}

// ---------------------------------------------------------------------------
// minimal projective resolutions

struct ResolutionTerm {
    std::vector<int> multiplicities; // Betti numbers: copies of P_i
    Representation term;
    ModuleMap differential; // term -> previous term (term 0 -> module)
    std::vector<std::vector<int>> gen_coords_for_check;
};

struct Resolution {
    Representation module;
    std::vector<ResolutionTerm> terms;
    bool complete; // the next syzygy vanished
};

// Resolution prefix with exactness and minimality verified at every step.
inline Resolution minimal_resolution(const Representation& m, int max_steps) {
    if (m.is_zero())
        throw ZeroModuleError("resolution of the zero module");
    Resolution res{m, {}, false};
    Representation cur = m;
    std::vector<Matrix> prev_basis;
    for (int step = 0; step <= max_steps; ++step) {
        SyzygyData sd = syzygy_step(cur);
        ModuleMap diff = sd.cover.cover;
        if (step > 0) {
            // compose cover with the kernel inclusion into the previous term
            std::vector<Matrix> maps;
            for (std::size_t v = 0; v < diff.vertex_maps.size(); ++v)
                maps.push_back(diff.vertex_maps[v] * prev_basis[v]);
            diff = ModuleMap(sd.cover.cover_module, res.terms.back().term, std::move(maps));
            // exactness: rank d_k + rank d_{k-1} = dim of the middle term
            const ModuleMap& before = res.terms.back().differential;
            for (int v = 1; v <= m.algebra().vertex_count(); ++v) {
                int mid = res.terms.back().term.dim(v);
                if (diff.vertex_maps[v - 1].rank() + before.vertex_maps[v - 1].rank() != mid)
                    throw std::logic_error("minimal_resolution: not exact");
            }
            // minimality: image inside the radical of the previous term
            for (int v = 1; v <= m.algebra().vertex_count(); ++v)
                for (int g : res.terms.back().gen_coords_for_check[v])
                    for (int r = 0; r < diff.vertex_maps[v - 1].rows(); ++r)
                        if (diff.vertex_maps[v - 1].at(r, g) != 0)
                            throw std::logic_error("minimal_resolution: not minimal");
        }
        res.terms.push_back(ResolutionTerm{sd.cover.multiplicities, sd.cover.cover_module,
                                           std::move(diff), sd.cover.generator_coords});
        if (sd.syzygy.is_zero()) {
            res.complete = true;
            break;
        }
        prev_basis = sd.inclusion.vertex_maps;
        cur = sd.syzygy;
    }
    return res;
}

// ---------------------------------------------------------------------------
// dimensions

struct ResolveOptions {
    int cap = 64;
    std::uint64_t seed = 0;
    int dim_limit = 512;           // give up (AtLeast) before resolving anything larger
    bool semisimple_shortcut = true; // route semisimple syzygies through the path graph
    int iso_unknown_limit = 1024;  // periodicity tests skip Hom systems larger than this
};

namespace detail {

inline ExtDim shift(const ExtDim& d, int by) {
    switch (d.kind()) {
    case ExtDim::Kind::Finite:
        return ExtDim::finite(d.finite_value() + by);
    case ExtDim::Kind::AtLeast:
        return ExtDim::at_least(d.bound() + by);
    default:
        return d;
    }
}

inline ExtDim semisimple_pd_via_graph(const Representation& r) {
    const PathSyzygyGraph& g = path_syzygy_graph(r.algebra());
    ExtDim d = ExtDim::neg_infinity();
    for (int v = 1; v <= r.algebra().vertex_count(); ++v) {
        if (r.dim(v) == 0)
            continue;
        ExtDim s = g.pd_of_simple(v);
        if (s.is_infinite())
            return s;
        d = extdim_max(d, s);
    }
    return d;
}

} // namespace detail

inline ExtDim projective_dimension(const Representation& m, const ResolveOptions& opt = {}) {
    if (m.is_zero())
        return ExtDim::neg_infinity();
    if (opt.semisimple_shortcut && m.is_semisimple())
        return detail::semisimple_pd_via_graph(m);

    std::vector<Representation> chain{m};
    for (int n = 1; n <= opt.cap + 1; ++n) {
        // the size gate comes before the cover: resolving past the budget is
        // what gets expensive, not the syzygy itself
        if (chain.back().total_dim() > opt.dim_limit)
            return ExtDim::at_least(n - 1);
        Representation k = syzygy_step(chain.back()).syzygy;
        if (k.is_zero())
            return ExtDim::finite(n - 1);
        if (opt.semisimple_shortcut && k.is_semisimple())
            return detail::shift(detail::semisimple_pd_via_graph(k), n);
        for (std::size_t idx = 0; idx < chain.size(); ++idx) {
            if (!chain[idx].same_dims(k))
                continue;
            long long unknowns = 0;
            for (int d : k.dims())
                unknowns += (long long)d * d;
            if (unknowns > opt.iso_unknown_limit)
                continue; // sound: skipping can only delay a certificate
            std::uint64_t state = opt.seed ^ (0x5851f42d4c957f2dull * (std::uint64_t)(n * 8191 + (int)idx + 1));
            IsoResult iso = is_isomorphic(chain[idx], k, splitmix64(state));
            if (iso.verdict == Iso::Yes)
                return ExtDim::infinite(
                    SyzygyPeriodicityCertificate{(int)idx, n, k.dims()});
            // No and Inconclusive both just keep iterating
        }
        chain.push_back(std::move(k));
    }
    return ExtDim::at_least(opt.cap);
}

inline ExtDim injective_dimension(const Representation& m, const ResolveOptions& opt = {}) {
    if (m.is_zero())
        return ExtDim::neg_infinity();
    return projective_dimension(dual(m), opt);
}

// dim Ext^n(m, S_i): multiplicity of P_i in term n of the minimal resolution
inline std::optional<int> ext_dim(int n, const Representation& m, int vertex,
                                  const ResolveOptions& opt = {}) {
    if (m.is_zero())
        return 0;
    if (n > opt.cap)
        return std::nullopt;
    Representation cur = m;
    for (int k = 0; k < n; ++k) {
        if (cur.total_dim() > opt.dim_limit)
            return std::nullopt;
        cur = syzygy_step(cur).syzygy;
        if (cur.is_zero())
            return 0;
    }
    if (cur.total_dim() > opt.dim_limit)
        return std::nullopt;
    return top(cur).dim(vertex);
}

// ---------------------------------------------------------------------------
// global dimension

// Primary method: the path syzygy graph (exact). Secondary method, verified
// against it whenever determined: syzygy iteration over every simple.
inline ExtDim global_dimension(const Algebra& a, int cap = 64, std::uint64_t seed = 0,
                               bool cross_check = true) {
    ExtDim primary = path_syzygy_graph(a).global_dimension();
    if (cross_check) {
        ResolveOptions opt;
        opt.cap = primary.is_finite() ? std::min(cap, std::max(primary.finite_value(), 1)) : cap;
        opt.seed = seed;
        opt.semisimple_shortcut = false;
        opt.dim_limit = std::max(64, 8 * (int)a.dimension());
        ExtDim secondary = ExtDim::neg_infinity();
        for (int v = 1; v <= a.vertex_count(); ++v)
            secondary = extdim_max(secondary, projective_dimension(simple(a, v), opt));
        if (tri_eq(primary, secondary) == Tri::False)
            throw std::logic_error("global_dimension: syzygy iteration contradicts the path graph");
    }
    return primary;
}

// ---------------------------------------------------------------------------
// predicates

inline bool is_local(const Algebra& a) { return a.vertex_count() == 1; }

inline bool is_injective_module(const Representation& m, int /*cap*/ = 64) {
    if (m.is_zero())
        throw ZeroModuleError("injectivity of the zero module");
    return injective_envelope(m).envelope.dims() == m.dims();
}

inline bool is_selfinjective(const Algebra& a, int cap = 64) {
    for (int v = 1; v <= a.vertex_count(); ++v)
        if (!is_injective_module(projective(a, v), cap))
            return false;
    return true;
}

// every projective and every injective is uniserial: at most one normal
// path per (start vertex, length) and per (end vertex, length)
inline bool is_nakayama(const Algebra& a) {
    std::map<std::pair<int, int>, int> from, to;
    for (const PathWord& p : a.basis()) {
        if (++from[{p.start_vertex, p.length()}] > 1)
            return false;
        if (++to[{p.end_vertex(a.quiver()), p.length()}] > 1)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Gorenstein dimension

enum class GorensteinVerdict { Gorenstein, NotGorenstein, Undetermined };

struct GorensteinResult {
    ExtDim right; // id of the regular right module
    ExtDim left;  // id of the regular right module over the opposite algebra
    GorensteinVerdict verdict;
};

inline GorensteinResult gorenstein_dimension(const Algebra& a, int cap = 64,
                                             std::uint64_t seed = 0) {
    ResolveOptions opt;
    opt.cap = cap;
    opt.seed = seed;
    ExtDim right = injective_dimension(radical_power_module(a, 0), opt);
    ExtDim left = injective_dimension(radical_power_module(opposite(a), 0), opt);
    GorensteinVerdict v;
    if (right.is_at_least() || left.is_at_least())
        v = GorensteinVerdict::Undetermined;
    else if (right.is_finite() && left.is_finite() &&
             right.finite_value() == left.finite_value())
        v = GorensteinVerdict::Gorenstein;
    else
        v = GorensteinVerdict::NotGorenstein;
    return {std::move(right), std::move(left), v};
}

} // namespace quivhom
