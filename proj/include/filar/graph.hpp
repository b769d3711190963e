#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "filar/errors.hpp"

namespace filar {

/// Simple undirected connected d-regular graph on at most 62 vertices.
/// Instances are immutable and only constructed through validate() /
/// from_edges(), so holding a Graph is proof that all invariants hold.
class Graph {
public:
    static constexpr int max_vertices = 62;

    /// Checks a candidate 0/1 adjacency matrix and wraps it.
    /// Invariants are reported in order: simple (square, symmetric, 0/1,
    /// zero diagonal), handshake (when expected_degree is given), regular,
    /// connected.
    static Graph validate(const std::vector<std::vector<int>>& adjacency,
                          int expected_degree = 0);

    /// Builds the adjacency matrix from an undirected edge list, then runs
    /// the same validation.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            int expected_degree = 0);

    int order() const { return n_; }
    int degree() const { return d_; }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    std::uint64_t row_bits(int v) const { return rows_[v]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// Length of a shortest cycle; 0 for forests (degree <= 1 corner cases).
    int girth() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    Graph(int n, int d, std::vector<std::uint64_t> rows);

    int n_;
    int d_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::vector<int>> adj_;
};

struct GraphFamily {
    enum class Provenance { enumerated, ingested, constructed };

    int degree = 0;
    int vertex_count = 0;
    std::vector<Graph> graphs;
    Provenance provenance = Provenance::constructed;

    std::size_t size() const { return graphs.size(); }
};

// Named constructions.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph petersen_graph();

/// Cubic graph on n >= 8 (even) vertices attaining the maximal triangle
/// count 2*floor(n/4): a closed loop of diamonds for n % 4 == 0, an open
/// string with a clasp at each end for n % 4 == 2.
Graph string_of_diamonds(int n);

} // namespace filar
