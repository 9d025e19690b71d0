#pragma once

// Quivers (finite directed multigraphs, 1-based vertices) and path words.
// Includes the canonical form used for hashing and scan deduplication:
// the lexicographically least multiplicity matrix over all vertex
// permutations, found by branch-and-bound.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace quivhom {

struct Arrow {
    int id;     // 0-based, equals the index in Quiver::arrows()
    int source; // 1-based
    int target; // 1-based
    std::string name;
};

class Quiver {
public:
    Quiver(int vertex_count, std::vector<Arrow> arrows) : n_(vertex_count), arrows_(std::move(arrows)) {
        if (n_ <= 0)
            throw std::invalid_argument("Quiver: vertex count must be positive");
        for (int i = 0; i < (int)arrows_.size(); ++i) {
            Arrow& a = arrows_[i];
            if (a.id != i)
                throw std::invalid_argument("Quiver: arrow ids must be 0,1,...,m-1 in order");
            if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_)
                throw std::invalid_argument("Quiver: arrow endpoint out of range");
            if (a.name.empty())
                a.name = "a" + std::to_string(i + 1);
        }
        connected_ = compute_connected();
    }

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int id) const { return arrows_.at(id); }
    int arrow_count() const { return (int)arrows_.size(); }
    bool connected() const { return connected_; }

    std::vector<int> arrows_from(int vertex) const {
        std::vector<int> out;
        for (const Arrow& a : arrows_)
            if (a.source == vertex)
                out.push_back(a.id);
        return out;
    }
    std::vector<int> arrows_to(int vertex) const {
        std::vector<int> out;
        for (const Arrow& a : arrows_)
            if (a.target == vertex)
                out.push_back(a.id);
        return out;
    }

    Quiver reversed() const {
        std::vector<Arrow> rev;
        rev.reserve(arrows_.size());
        for (const Arrow& a : arrows_)
            rev.push_back({a.id, a.target, a.source, a.name});
        return Quiver(n_, std::move(rev));
    }

    // multiplicity matrix, row-major: mult[i*n+j] = #arrows (i+1) -> (j+1)
    std::vector<int> multiplicity_matrix() const {
        std::vector<int> m((std::size_t)n_ * n_, 0);
        for (const Arrow& a : arrows_)
            ++m[(std::size_t)(a.source - 1) * n_ + (a.target - 1)];
        return m;
    }

private:
    bool compute_connected() const {
        if (n_ == 1)
            return true;
        std::vector<std::vector<int>> adj(n_ + 1);
        for (const Arrow& a : arrows_) {
            adj[a.source].push_back(a.target);
            adj[a.target].push_back(a.source);
        }
        std::vector<bool> seen(n_ + 1, false);
        std::vector<int> stack{1};
        seen[1] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n_;
    }

    int n_;
    std::vector<Arrow> arrows_;
    bool connected_;
};

// A path in the quiver: a start vertex and a composable arrow sequence.
// The empty sequence is the trivial path e_i at the start vertex.
struct PathWord {
    int start_vertex = 1;
    std::vector<int> arrows;

    int length() const { return (int)arrows.size(); }
    bool trivial() const { return arrows.empty(); }

    int end_vertex(const Quiver& q) const {
        return arrows.empty() ? start_vertex : q.arrow(arrows.back()).target;
    }

    bool composable_in(const Quiver& q) const {
        int at = start_vertex;
        if (at < 1 || at > q.vertex_count())
            return false;
        for (int id : arrows) {
            if (id < 0 || id >= q.arrow_count() || q.arrow(id).source != at)
                return false;
            at = q.arrow(id).target;
        }
        return true;
    }

    std::string spell(const Quiver& q) const {
        if (arrows.empty())
            return "e" + std::to_string(start_vertex);
        std::string s;
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            if (i)
                s += "*";
            s += q.arrow(arrows[i]).name;
        }
        return s;
    }

    bool operator==(const PathWord& o) const {
        return start_vertex == o.start_vertex && arrows == o.arrows;
    }
};

// Canonical basis order: length, then arrow-id sequence, then start vertex.
inline bool path_less(const PathWord& a, const PathWord& b) {
    if (a.length() != b.length())
        return a.length() < b.length();
    if (a.arrows != b.arrows)
        return a.arrows < b.arrows;
    return a.start_vertex < b.start_vertex;
}

// w contains r as a consecutive subword (arrow ids suffice: a contiguous
// run of arrows inside a composable word is itself a composable path).
inline bool contains_subword(const std::vector<int>& w, const std::vector<int>& r) {
    if (r.empty() || r.size() > w.size())
        return false;
    for (std::size_t off = 0; off + r.size() <= w.size(); ++off) {
        if (std::equal(r.begin(), r.end(), w.begin() + off))
            return true;
    }
    return false;
}

inline bool has_suffix(const std::vector<int>& w, const std::vector<int>& r) {
    return r.size() <= w.size() && std::equal(r.begin(), r.end(), w.end() - r.size());
}

struct CanonicalQuiver {
    std::vector<int> matrix; // canonical multiplicity matrix, row-major
    std::vector<int> perm;   // perm[new_index] = old vertex index (0-based)
};

// Lexicographically least multiplicity matrix (reading order) over all
// vertex relabelings. Plain permutation sweep with lazy comparison; fine
// for the vertex counts this engine targets.
inline CanonicalQuiver canonical_digraph_form(const Quiver& q) {
    const int n = q.vertex_count();
    const auto mult = q.multiplicity_matrix();
    if (n == 1)
        return {mult, {0}};

    auto cell = [&](const std::vector<int>& perm, int i, int j) {
        return mult[(std::size_t)perm[i] * n + perm[j]];
    };
    std::vector<int> perm(n), best_perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    best_perm = perm;
    // candidate < best, comparing permuted matrices cell by cell
    auto better = [&](const std::vector<int>& cand, const std::vector<int>& best) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int c = cell(cand, i, j), b = cell(best, i, j);
                if (c != b)
                    return c < b;
            }
        return false;
    };
    while (std::next_permutation(perm.begin(), perm.end()))
        if (better(perm, best_perm))
            best_perm = perm;

    std::vector<int> out((std::size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[(std::size_t)i * n + j] = cell(best_perm, i, j);
    return {std::move(out), std::move(best_perm)};
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace quivhom
