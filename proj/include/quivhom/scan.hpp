#pragma once

// Family scans: Kupisch series enumeration (linear and cyclic, the cyclic
// ones deduplicated by rotation) and connected digraph enumeration up to
// isomorphism for radical-square-zero algebras. Algebras are checked in
// parallel with a bounded pool; reports come back in enumeration order and
// every worker derives its seed from (seed, label), so the output does not
// depend on scheduling.

#include "quivhom/report.hpp"

#include <atomic>
#include <optional>
#include <functional>
#include <thread>

namespace quivhom {

// admissible linear series for exactly n vertices, lexicographic
inline std::vector<std::vector<int>> enumerate_linear_kupisch(int n, int max_len) {
    std::vector<std::vector<int>> out;
    if (n < 2)
        return out;
    std::vector<int> c(n);
    c[n - 1] = 1;
    std::function<void(int)> place = [&](int i) {
        if (i < 0) {
            out.push_back(c);
            return;
        }
        for (int v = 2; v <= std::min(c[i + 1] + 1, max_len); ++v) {
            c[i] = v;
            place(i - 1);
        }
    };
    place(n - 2);
    std::sort(out.begin(), out.end());
    return out;
}

// admissible cyclic series for exactly n vertices, one representative per
// rotation class (the lexicographically least), lexicographic
inline std::vector<std::vector<int>> enumerate_cyclic_kupisch(int n, int max_len) {
    std::vector<std::vector<int>> out;
    if (n < 1 || max_len < 2)
        return out;
    std::vector<int> c(n, 2);
    while (true) {
        bool admissible = true;
        for (int i = 0; i < n && admissible; ++i)
            admissible = c[i] <= c[(i + 1) % n] + 1;
        if (admissible) {
            bool least = true;
            std::vector<int> rot = c;
            for (int s = 1; s < n && least; ++s) {
                std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                least = !(rot < c);
            }
            if (least)
                out.push_back(c);
        }
        int pos = n - 1;
        while (pos >= 0 && c[pos] == max_len)
            c[pos--] = 2;
        if (pos < 0)
            break;
        ++c[pos];
    }
    return out;
}

// connected digraphs on exactly n vertices with at most `max_parallel`
// arrows per ordered pair, one canonical representative per isomorphism
// class, in lexicographic order of the multiplicity matrix
inline std::vector<Quiver> enumerate_connected_digraphs(int n, int max_parallel = 2) {
    std::vector<Quiver> out;
    std::vector<int> m((std::size_t)n * n, 0);
    while (true) {
        bool any = false;
        for (int v : m)
            any = any || v > 0;
        if (any) {
            std::vector<Arrow> arrows;
            int id = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < m[(std::size_t)i * n + j]; ++k) {
                        arrows.push_back({id, i + 1, j + 1, "a" + std::to_string(id + 1)});
                        ++id;
                    }
            Quiver q(n, std::move(arrows));
            if (q.connected() && canonical_digraph_form(q).matrix == m)
                out.push_back(std::move(q));
        }
        int pos = (int)m.size() - 1;
        while (pos >= 0 && m[pos] == max_parallel)
            m[pos--] = 0;
        if (pos < 0)
            break;
        ++m[pos];
    }
    return out;
}

struct ScanOptions {
    int cap = 64;
    std::uint64_t seed = 0;
    int jobs = 0; // 0 = hardware concurrency
};

namespace detail {

// longest directed path (edge count) of an acyclic quiver by plain DFS;
// empty when a directed cycle exists
inline std::optional<int> longest_directed_path(const Quiver& q) {
    const int n = q.vertex_count();
    std::vector<std::vector<int>> succ(n + 1);
    for (const Arrow& a : q.arrows())
        succ[a.source].push_back(a.target);
    std::vector<int> color(n + 1, 0), depth(n + 1, 0);
    std::function<bool(int)> dfs = [&](int v) {
        color[v] = 1;
        for (int w : succ[v]) {
            if (color[w] == 1)
                return false;
            if (color[w] == 0 && !dfs(w))
                return false;
            depth[v] = std::max(depth[v], depth[w] + 1);
        }
        color[v] = 2;
        return true;
    };
    int best = 0;
    for (int v = 1; v <= n; ++v) {
        if (color[v] == 0 && !dfs(v))
            return std::nullopt;
        best = std::max(best, depth[v]);
    }
    return best;
}

} // namespace detail

namespace detail {

struct ScanTask {
    std::string label;
    std::function<Algebra()> build;
};

inline std::vector<Report> run_scan(const std::vector<ScanTask>& tasks, const ScanOptions& opt) {
    std::vector<Report> reports(tasks.size());
    std::vector<std::string> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    int jobs = opt.jobs > 0 ? opt.jobs : (int)std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<int>(jobs, (int)tasks.size() ? (int)tasks.size() : 1);
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            std::uint64_t task_seed = opt.seed ^ fnv1a64(tasks[i].label);
            try {
                Algebra a = tasks[i].build();
                reports[i] = check_algebra(a, opt.cap, task_seed, tasks[i].label);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("scan: " + tasks[i].label + ": " + errors[i]);
    return reports;
}

} // namespace detail

inline std::vector<Report> scan_nakayama(const PrimeField& field, KupischShape shape,
                                         int max_vertices, int max_len,
                                         const ScanOptions& opt = {}) {
    if (shape == KupischShape::Linear && max_vertices < 2)
        throw std::invalid_argument("scan_nakayama: linear series need at least 2 vertices");
    if (max_vertices < 1)
        throw std::invalid_argument("scan_nakayama: max_vertices must be positive");
    std::vector<detail::ScanTask> tasks;
    const int n0 = shape == KupischShape::Linear ? 2 : 1;
    for (int n = n0; n <= max_vertices; ++n) {
        auto series = shape == KupischShape::Linear ? enumerate_linear_kupisch(n, max_len)
                                                    : enumerate_cyclic_kupisch(n, max_len);
        for (auto& c : series) {
            KupischSeries k{shape, std::move(c)};
            tasks.push_back({k.label(), [field, k] { return nakayama_from_kupisch(field, k); }});
        }
    }
    return detail::run_scan(tasks, opt);
}

inline std::vector<Report> scan_radical_square_zero(const PrimeField& field, int max_vertices,
                                                    const ScanOptions& opt = {}) {
    if (max_vertices < 1)
        throw std::invalid_argument("scan_radical_square_zero: max_vertices must be positive");
    std::vector<detail::ScanTask> tasks;
    std::vector<std::optional<int>> longest;
    for (int n = 1; n <= max_vertices; ++n) {
        for (Quiver q : enumerate_connected_digraphs(n)) {
            std::string label = "radsq[n=" + std::to_string(n) + ":";
            for (int v : q.multiplicity_matrix())
                label += std::to_string(v);
            label += "]";
            longest.push_back(detail::longest_directed_path(q));
            tasks.push_back({label, [field, q] { return radical_square_zero(field, q); }});
        }
    }
    std::vector<Report> reports = detail::run_scan(tasks, opt);
    // acyclic quivers must come out with gldim = longest path length
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (!longest[i].has_value())
            continue;
        if (!reports[i].gldim.is_finite() || reports[i].gldim.finite_value() != *longest[i])
            throw std::logic_error("scan_radical_square_zero: " + reports[i].label +
                                   " has gldim " + reports[i].gldim.str() +
                                   " but longest path " + std::to_string(*longest[i]));
    }
    return reports;
}

} // namespace quivhom
