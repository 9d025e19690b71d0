#pragma once

// Bound quiver algebras kQ/I over GF(p) with monomial admissible ideals.
// The basis is the set of normal paths: composable words containing no
// relation as a consecutive subword, enumerated by BFS over lengths.
// Immutable after construction; handles share the underlying data.

#include "quivhom/field.hpp"
#include "quivhom/quiver.hpp"

#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace quivhom {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfiniteDimensionalError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotConnectedError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct BadRelationError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct InvalidKupischError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NonSemisimpleError : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct ZeroModuleError : AlgebraError {
    using AlgebraError::AlgebraError;
};

class Algebra;

namespace detail {

struct AlgebraData {
    PrimeField field;
    Quiver quiver;
    std::vector<PathWord> relations; // minimal monomial generators, length >= 2, sorted
    std::vector<PathWord> basis;     // normal paths in length-lex order
    int loewy_length = 1;
    std::vector<std::vector<int>> layers;        // layers[k] = basis indices of paths of length k
    std::vector<std::vector<int>> from_vertex;   // basis indices starting at v (1-based slot v)
    std::vector<std::vector<int>> to_vertex;     // basis indices ending at v
    std::map<std::pair<int, std::vector<int>>, int> index; // (start, word) -> basis index
    std::string id;                              // canonical presentation hash, hex

    // lazily built companions; logically part of the immutable value
    mutable std::once_flag opposite_once;
    mutable std::shared_ptr<const AlgebraData> opposite;
    mutable std::once_flag graph_once;
    mutable std::shared_ptr<const void> syzygy_graph;

    AlgebraData(PrimeField f, Quiver q) : field(std::move(f)), quiver(std::move(q)) {}
};

} // namespace detail

class Algebra {
public:
    explicit Algebra(std::shared_ptr<const detail::AlgebraData> d) : d_(std::move(d)) {}

    const PrimeField& field() const { return d_->field; }
    const Quiver& quiver() const { return d_->quiver; }
    int vertex_count() const { return d_->quiver.vertex_count(); }
    const std::vector<PathWord>& relations() const { return d_->relations; }
    const std::vector<PathWord>& basis() const { return d_->basis; }
    int dimension() const { return (int)d_->basis.size(); }
    int loewy_length() const { return d_->loewy_length; }
    const std::vector<std::vector<int>>& radical_layers() const { return d_->layers; }
    const std::vector<int>& basis_from(int vertex) const { return d_->from_vertex.at(vertex); }
    const std::vector<int>& basis_to(int vertex) const { return d_->to_vertex.at(vertex); }
    const std::string& id() const { return d_->id; }
    bool semisimple() const { return d_->quiver.arrow_count() == 0; }

    const PathWord& path(int basis_index) const { return d_->basis.at(basis_index); }

    int path_index(const PathWord& w) const {
        auto it = d_->index.find({w.start_vertex, w.arrows});
        return it == d_->index.end() ? -1 : it->second;
    }

    bool normal(const std::vector<int>& word) const {
        for (const PathWord& r : d_->relations)
            if (contains_subword(word, r.arrows))
                return false;
        return true;
    }

    // Product of two basis paths: basis index of the concatenation, or -1
    // when the paths do not compose or the product is zero in the algebra.
    int multiply(int i, int j) const {
        const PathWord& p = d_->basis[i];
        const PathWord& q = d_->basis[j];
        if (p.end_vertex(d_->quiver) != q.start_vertex)
            return -1;
        PathWord w{p.start_vertex, p.arrows};
        w.arrows.insert(w.arrows.end(), q.arrows.begin(), q.arrows.end());
        return path_index(w);
    }

    // Right action by one arrow: index of p*a, or -1 when zero.
    int extend_by_arrow(int basis_index, int arrow_id) const {
        const PathWord& p = d_->basis[basis_index];
        if (p.end_vertex(d_->quiver) != d_->quiver.arrow(arrow_id).source)
            return -1;
        PathWord w{p.start_vertex, p.arrows};
        w.arrows.push_back(arrow_id);
        return path_index(w);
    }

    bool same_presentation(const Algebra& o) const {
        return d_->field == o.d_->field && d_->id == o.d_->id &&
               d_->quiver.multiplicity_matrix() == o.d_->quiver.multiplicity_matrix();
    }

    bool same_object(const Algebra& o) const { return d_.get() == o.d_.get(); }

    const std::shared_ptr<const detail::AlgebraData>& data() const { return d_; }

private:
    std::shared_ptr<const detail::AlgebraData> d_;
};

namespace detail {

inline std::string presentation_hash(const PrimeField& f, const Quiver& q,
                                     const std::vector<PathWord>& relations) {
    const int n = q.vertex_count();
    CanonicalQuiver canon = canonical_digraph_form(q);
    // old vertex (0-based) -> canonical position
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[canon.perm[i]] = i;
    // relabel arrows deterministically: sort by (canonical source, canonical
    // target, original id); parallel arrows keep their relative input order
    std::vector<int> order(q.arrow_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const Arrow& x = q.arrow(a);
        const Arrow& y = q.arrow(b);
        int xs = pos[x.source - 1], ys = pos[y.source - 1];
        int xt = pos[x.target - 1], yt = pos[y.target - 1];
        return std::tie(xs, xt, a) < std::tie(ys, yt, b);
    });
    std::vector<int> newid(q.arrow_count());
    for (int k = 0; k < (int)order.size(); ++k)
        newid[order[k]] = k;

    std::vector<std::vector<int>> rel_words;
    rel_words.reserve(relations.size());
    for (const PathWord& r : relations) {
        std::vector<int> w;
        w.reserve(r.arrows.size());
        for (int a : r.arrows)
            w.push_back(newid[a]);
        rel_words.push_back(std::move(w));
    }
    std::sort(rel_words.begin(), rel_words.end());

    std::ostringstream os;
    os << "p" << f.prime() << ";n" << n << ";Q";
    for (int v : canon.matrix)
        os << v << ",";
    os << ";R";
    for (const auto& w : rel_words) {
        for (int a : w)
            os << a << ".";
        os << "|";
    }
    std::uint64_t h = fnv1a64(os.str());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string(buf);
}

} // namespace detail

inline Algebra build_monomial_algebra(const PrimeField& field, const Quiver& quiver,
                                      std::vector<PathWord> relations, int max_path_len = 64) {
    if (!quiver.connected())
        throw NotConnectedError("quiver is not connected");
    for (const PathWord& r : relations) {
        if (r.length() < 2)
            throw BadRelationError("relation shorter than two arrows: " + r.spell(quiver));
        if (!r.composable_in(quiver))
            throw BadRelationError("relation is not a composable path");
    }
    // minimal generating set: drop duplicates and words containing another
    // relation as a subword (normality is unchanged by that)
    std::sort(relations.begin(), relations.end(),
              [](const PathWord& a, const PathWord& b) { return path_less(a, b); });
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
    std::vector<PathWord> minimal;
    for (const PathWord& r : relations) {
        bool redundant = false;
        for (const PathWord& s : relations) {
            if (s.arrows.size() < r.arrows.size() && contains_subword(r.arrows, s.arrows)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            minimal.push_back(r);
    }

    auto data = std::make_shared<detail::AlgebraData>(field, quiver);
    data->relations = std::move(minimal);

    const int n = quiver.vertex_count();
    data->from_vertex.assign(n + 1, {});
    data->to_vertex.assign(n + 1, {});

    // BFS by length; extending a normal word, only relation suffixes can
    // newly appear, so the suffix test suffices
    std::vector<PathWord> layer;
    for (int v = 1; v <= n; ++v)
        layer.push_back(PathWord{v, {}});
    int length = 0;
    while (!layer.empty()) {
        if (length >= max_path_len)
            throw InfiniteDimensionalError("normal paths of length " + std::to_string(max_path_len) +
                                           " exist; the presentation is not admissible at this bound");
        data->layers.emplace_back();
        for (PathWord& w : layer) {
            int idx = (int)data->basis.size();
            data->index.emplace(std::make_pair(w.start_vertex, w.arrows), idx);
            data->layers.back().push_back(idx);
            data->from_vertex[w.start_vertex].push_back(idx);
            data->to_vertex[w.end_vertex(quiver)].push_back(idx);
            data->basis.push_back(std::move(w));
        }
        std::vector<PathWord> next;
        for (int idx : data->layers.back()) {
            const PathWord& w = data->basis[idx];
            int end = w.end_vertex(quiver);
            for (const Arrow& a : quiver.arrows()) {
                if (a.source != end)
                    continue;
                PathWord ext{w.start_vertex, w.arrows};
                ext.arrows.push_back(a.id);
                bool dead = false;
                for (const PathWord& r : data->relations) {
                    if (has_suffix(ext.arrows, r.arrows)) {
                        dead = true;
                        break;
                    }
                }
                if (!dead)
                    next.push_back(std::move(ext));
            }
        }
        layer = std::move(next);
        ++length;
    }
    data->loewy_length = (int)data->layers.size();
    data->id = detail::presentation_hash(field, quiver, data->relations);
    return Algebra(std::move(data));
}

inline Algebra opposite(const Algebra& a) {
    std::call_once(a.data()->opposite_once, [&] {
        Quiver rev = a.quiver().reversed();
        std::vector<PathWord> rel;
        rel.reserve(a.relations().size());
        for (const PathWord& r : a.relations()) {
            PathWord w;
            w.arrows.assign(r.arrows.rbegin(), r.arrows.rend());
            w.start_vertex = r.end_vertex(a.quiver());
            rel.push_back(std::move(w));
        }
        Algebra op = build_monomial_algebra(a.field(), rev, std::move(rel),
                                            a.loewy_length() + 1);
        a.data()->opposite = op.data();
    });
    return Algebra(a.data()->opposite);
}

inline Quiver ext_quiver(const Algebra& a) {
    std::vector<Arrow> arrows;
    if (a.radical_layers().size() > 1) {
        for (int idx : a.radical_layers()[1]) {
            const PathWord& p = a.path(idx);
            int id = (int)arrows.size();
            arrows.push_back({id, p.start_vertex, p.end_vertex(a.quiver()),
                              a.quiver().arrow(p.arrows[0]).name});
        }
    }
    return Quiver(a.vertex_count(), std::move(arrows));
}

} // namespace quivhom
