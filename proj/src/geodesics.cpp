#include "filar/geodesics.hpp"

#include <cmath>

namespace filar {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowGuard("walk count exceeds 64 bits");
    return r;
}

} // namespace

NonBacktrackingMatrix NonBacktrackingMatrix::build(const Graph& g) {
    NonBacktrackingMatrix b;
    const int n = g.order();
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            index[u][v] = static_cast<int>(b.edges.size());
            b.edges.emplace_back(u, v);
        }
    b.dimension = static_cast<int>(b.edges.size());
    b.successors.resize(b.dimension);
    for (int e = 0; e < b.dimension; ++e) {
        const auto [u, v] = b.edges[e];
        for (int w : g.neighbors(v))
            if (w != u)
                b.successors[e].push_back(index[v][w]);
    }
    return b;
}

std::vector<std::int64_t> nb_traces(const Graph& g, int cutoff) {
    if (cutoff < 1)
        throw InfeasibleParameters("cutoff must be >= 1");
    if (cutoff > 60)
        throw OverflowGuard("trace length > 60 may exceed 64 bits");

    const NonBacktrackingMatrix b = NonBacktrackingMatrix::build(g);
    const int m = b.dimension;

    // power = B^len, built by repeated sparse right-multiplication.
    std::vector<std::int64_t> power(static_cast<std::size_t>(m) * m, 0);
    for (int e = 0; e < m; ++e)
        for (int f : b.successors[e])
            power[static_cast<std::size_t>(e) * m + f] = 1;

    std::vector<std::int64_t> traces(cutoff + 1, 0);
    std::vector<std::int64_t> next(static_cast<std::size_t>(m) * m);
    for (int len = 1; len <= cutoff; ++len) {
        if (len > 1) {
            std::fill(next.begin(), next.end(), 0);
            for (int i = 0; i < m; ++i) {
                const std::int64_t* row = &power[static_cast<std::size_t>(i) * m];
                std::int64_t* out = &next[static_cast<std::size_t>(i) * m];
                for (int k = 0; k < m; ++k) {
                    const std::int64_t x = row[k];
                    if (x == 0)
                        continue;
                    for (int f : b.successors[k])
                        out[f] = checked_add(out[f], x);
                }
            }
            power.swap(next);
        }
        std::int64_t tr = 0;
        for (int i = 0; i < m; ++i)
            tr = checked_add(tr, power[static_cast<std::size_t>(i) * m + i]);
        traces[len] = tr;
    }
    return traces;
}

std::int64_t nb_trace(const Graph& g, int len) {
    return nb_traces(g, len)[len];
}

GeodesicSpectrum length_spectrum(const Graph& g, int cutoff) {
    if (cutoff < 3)
        throw InfeasibleParameters("cutoff must be >= 3");
    const std::vector<std::int64_t> traces = nb_traces(g, cutoff);

    // tr(B^l) = sum over divisors del of l of del * c_del.
    std::vector<std::int64_t> oriented(cutoff + 1, 0);
    GeodesicSpectrum spectrum;
    spectrum.cutoff = cutoff;
    for (int len = 1; len <= cutoff; ++len) {
        std::int64_t shorter = 0;
        for (int del = 1; del < len; ++del)
            if (len % del == 0)
                shorter = checked_add(shorter, del * oriented[del]);
        const std::int64_t rest = traces[len] - shorter;
        if (rest < 0 || rest % len != 0)
            throw InversionInconsistency("trace inversion failed at length " +
                                         std::to_string(len));
        oriented[len] = rest / len;
        if (oriented[len] % 2 != 0)
            throw InversionInconsistency("odd oriented class count at length " +
                                         std::to_string(len));
        if (len >= 3)
            spectrum.multiplicities[len] = oriented[len] / 2;
    }
    return spectrum;
}

SpectrumCounts multiplicities_from_spectrum(const SpectralSummary& s, int n, int q) {
    const double p3 = s.power_sum(3);
    const double p4 = s.power_sum(4);
    const double raw3 = p3 / 6.0;
    const double raw4 = (p4 - static_cast<double>(n) * (q + 1) * (2 * q + 1)) / 8.0;

    SpectrumCounts counts;
    counts.m3 = std::llround(raw3);
    counts.m4 = std::llround(raw4);
    counts.residual = std::max(std::abs(raw3 - static_cast<double>(counts.m3)),
                               std::abs(raw4 - static_cast<double>(counts.m4)));
    if (counts.residual > 1e-6)
        throw NonIntegral("power-sum multiplicities are not integral; residual " +
                          std::to_string(counts.residual));
    return counts;
}

std::int64_t count_short_cycles_bruteforce(const Graph& g, int len) {
    if (len < 3 || len > 6)
        throw InfeasibleParameters("brute-force cycle length must be in [3, 6]");
    const int n = g.order();
    std::int64_t count = 0;
    std::vector<int> path;
    std::vector<char> used(n, 0);

    // A cycle is counted once: smallest vertex first, and of its two
    // neighbors on the cycle the path starts with the smaller one.
    auto dfs = [&](auto&& self, int v) -> void {
        if (static_cast<int>(path.size()) == len) {
            if (g.adjacent(v, path[0]) && path[1] < path[len - 1])
                ++count;
            return;
        }
        for (int u : g.neighbors(v)) {
            if (u <= path[0] || used[u])
                continue;
            used[u] = 1;
            path.push_back(u);
            self(self, u);
            path.pop_back();
            used[u] = 0;
        }
    };

    for (int s = 0; s + len <= n; ++s) {
        path.assign(1, s);
        used.assign(n, 0);
        used[s] = 1;
        dfs(dfs, s);
    }
    return count;
}

} // namespace filar
