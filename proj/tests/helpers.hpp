#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "filar/graph.hpp"

namespace filar::testing {

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            a[v][u] = 1;
    return a;
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u > v)
                edges.emplace_back(perm[v], perm[u]);
    return Graph::from_edges(n, edges, g.degree());
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Exact trace of A^k by integer matrix powers; independent of the eigensolver.
inline std::int64_t adjacency_trace_power(const Graph& g, int k) {
    const int n = g.order();
    std::vector<std::int64_t> power(static_cast<std::size_t>(n) * n, 0),
        next(static_cast<std::size_t>(n) * n);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            power[static_cast<std::size_t>(v) * n + u] = 1;
    for (int step = 1; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const std::int64_t x = power[static_cast<std::size_t>(i) * n + j];
                if (x)
                    for (int u : g.neighbors(j))
                        next[static_cast<std::size_t>(i) * n + u] += x;
            }
        power.swap(next);
    }
    std::int64_t trace = 0;
    for (int i = 0; i < n; ++i)
        trace += power[static_cast<std::size_t>(i) * n + i];
    return trace;
}

// Count closed non-backtracking walks of the given length with a marked
// starting edge by exhaustive DFS over directed-edge sequences. Oracle for
// nb_trace on small graphs.
inline std::int64_t brute_nb_closed_walks(const Graph& g, int len) {
    const int n = g.order();
    std::int64_t count = 0;
    // sequences e_0 -> e_1 -> ... -> e_len with e_len = e_0
    for (int u0 = 0; u0 < n; ++u0) {
        for (int v0 : g.neighbors(u0)) {
            struct Frame {
                int u, v, steps;
            };
            std::vector<Frame> stack{{u0, v0, 0}};
            while (!stack.empty()) {
                const Frame f = stack.back();
                stack.pop_back();
                if (f.steps == len) {
                    if (f.u == u0 && f.v == v0)
                        ++count;
                    continue;
                }
                for (int w : g.neighbors(f.v))
                    if (w != f.u)
                        stack.push_back({f.v, w, f.steps + 1});
            }
        }
    }
    return count;
}

} // namespace filar::testing
