#include "filar/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "filar/canonical.hpp"
#include "filar/graph6.hpp"

namespace filar {

namespace {

class Generator {
public:
    Generator(int n, int d) : n_(n), d_(d), rows_(n, 0), deg_(n, 0) {}

    std::map<std::string, Graph> run() {
        // In any labeling that maximizes the adjacency word, vertex 0 is
        // adjacent to exactly 1..d.
        for (int v = 1; v <= d_; ++v)
            add_edge(0, v);
        next_new_ = d_ + 1;
        extend(1, 2);
        return std::move(found_);
    }

private:
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
        ++deg_[u];
        ++deg_[v];
    }

    void remove_edge(int u, int v) {
        rows_[u] &= ~(std::uint64_t{1} << v);
        rows_[v] &= ~(std::uint64_t{1} << u);
        --deg_[u];
        --deg_[v];
    }

    // Local-maximality prune, run when row u is complete (rows 0..u are
    // final). A completion can only be the word-maximal labeling of its
    // graph if no adjacent label swap (v, v+1) increases the word:
    //  * columns v, v+1 restricted to rows 0..u must not have their first
    //    difference as 0-before-1;
    //  * when the columns of u-1 and u agree on rows 0..u-2, row u-1 must
    //    not lose to row u on the remaining columns.
    bool locally_maximal_after_row(int u) const {
        const std::uint64_t low = (std::uint64_t{1} << (u + 1)) - 1;
        for (int v = u + 1; v + 1 < n_; ++v) {
            const std::uint64_t diff = (rows_[v] ^ rows_[v + 1]) & low;
            if (diff && !((rows_[v] >> __builtin_ctzll(diff)) & 1u))
                return false;
        }
        if (u >= 1) {
            const std::uint64_t above = (std::uint64_t{1} << (u - 1)) - 1;
            if (((rows_[u - 1] ^ rows_[u]) & above) == 0) {
                const std::uint64_t diff = (rows_[u - 1] ^ rows_[u]) >> (u + 1);
                if (diff && ((rows_[u] >> (__builtin_ctzll(diff) + u + 1)) & 1u))
                    return false;
            }
        }
        return true;
    }

    void extend(int u, int from) {
        if (u == n_) {
            emit();
            return;
        }
        if (u >= next_new_)
            return; // vertices 0..u-1 are saturated and form a closed component
        const int need = d_ - deg_[u];
        if (need == 0) {
            if (locally_maximal_after_row(u))
                extend(u + 1, u + 2);
            return;
        }

        const int hi = std::min(next_new_, n_ - 1);
        for (int v = std::max(from, u + 1); v <= hi; ++v) {
            if (deg_[v] >= d_ || adjacent(u, v))
                continue;
            // Enough open slots left for the remaining picks?
            int avail = (next_new_ <= n_ - 1) ? n_ - next_new_ : 0;
            for (int w = v; w < next_new_; ++w)
                if (w > u && deg_[w] < d_ && !adjacent(u, w))
                    ++avail;
            if (avail < need)
                break;

            add_edge(u, v);
            const bool introduced = (v == next_new_);
            if (introduced)
                ++next_new_;
            extend(u, v + 1);
            if (introduced)
                --next_new_;
            remove_edge(u, v);
        }
    }

    void emit() {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n_; ++v)
            for (int w = v + 1; w < n_; ++w)
                if (adjacent(v, w))
                    edges.emplace_back(v, w);
        const Graph g = Graph::from_edges(n_, edges, d_);
        Graph canon = apply_labeling(g, canonical_labeling(g));
        std::string key = graph6_encode(canon);
        found_.try_emplace(std::move(key), std::move(canon));
    }

    int n_;
    int d_;
    std::vector<std::uint64_t> rows_;
    std::vector<int> deg_;
    int next_new_ = 0;
    std::map<std::string, Graph> found_;
};

bool within_guard(int n, int d, bool allow_long_runs) {
    if (d <= 2)
        return true;
    if (d == 3)
        return n <= (allow_long_runs ? 16 : 14);
    if (d == 4)
        return n <= (allow_long_runs ? 10 : 8);
    return n <= 8;
}

} // namespace

GraphFamily enumerate_regular(int n, int d, bool allow_long_runs) {
    if (d < 1)
        throw InfeasibleParameters("degree must be positive");
    if (n < d + 1)
        throw InfeasibleParameters("need n >= d+1");
    if (n > Graph::max_vertices)
        throw InfeasibleParameters("n > 62 is not supported");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw InfeasibleParameters("n*d must be even");
    if (!within_guard(n, d, allow_long_runs))
        throw SizeLimitExceeded("enumeration at n=" + std::to_string(n) + ", d=" +
                                std::to_string(d) + " requires the long-run flag");

    GraphFamily family;
    family.degree = d;
    family.vertex_count = n;
    family.provenance = GraphFamily::Provenance::enumerated;
    auto found = Generator(n, d).run();
    family.graphs.reserve(found.size());
    for (auto& [key, g] : found)
        family.graphs.push_back(std::move(g));
    return family;
}

} // namespace filar
