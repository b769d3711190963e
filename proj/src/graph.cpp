#include "filar/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace filar {

Graph::Graph(int n, int d, std::vector<std::uint64_t> rows)
    : n_(n), d_(d), rows_(std::move(rows)), adj_(n) {
    for (int v = 0; v < n_; ++v) {
        adj_[v].reserve(d_);
        for (int u = 0; u < n_; ++u) {
            if ((rows_[v] >> u) & 1u)
                adj_[v].push_back(u);
        }
    }
}

Graph Graph::validate(const std::vector<std::vector<int>>& adjacency,
                      int expected_degree) {
    const int n = static_cast<int>(adjacency.size());
    if (n < 1)
        throw NotSimple("empty adjacency structure");
    if (n > max_vertices)
        throw InfeasibleParameters("graphs on more than 62 vertices are not supported");

    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(adjacency[i].size()) != n)
            throw NotSimple("adjacency matrix is not square");
        for (int j = 0; j < n; ++j) {
            const int a = adjacency[i][j];
            if (a != 0 && a != 1)
                throw NotSimple("adjacency entries must be 0 or 1");
            if (i == j && a != 0)
                throw NotSimple("loop at vertex " + std::to_string(i));
            if (adjacency[j][i] != a)
                throw NotSimple("adjacency matrix is not symmetric");
        }
    }

    if (expected_degree > 0 && (static_cast<long long>(n) * expected_degree) % 2 != 0)
        throw OddHandshake("n*d must be even, got n=" + std::to_string(n) +
                           ", d=" + std::to_string(expected_degree));

    int d = expected_degree;
    for (int i = 0; i < n; ++i) {
        int deg = 0;
        for (int j = 0; j < n; ++j)
            deg += adjacency[i][j];
        if (d == 0)
            d = deg;
        if (deg != d)
            throw NotRegular(i, deg, d);
    }
    if (d < 1)
        throw NotRegular(0, 0, expected_degree > 0 ? expected_degree : 1);

    // Connectivity by BFS from vertex 0.
    std::vector<char> seen(n, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int u = 0; u < n; ++u) {
            if (adjacency[v][u] && !seen[u]) {
                seen[u] = 1;
                ++reached;
                queue.push(u);
            }
        }
    }
    if (reached != n)
        throw Disconnected("graph has more than one component");

    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adjacency[i][j])
                rows[i] |= std::uint64_t{1} << j;
    return Graph(n, d, std::move(rows));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        int expected_degree) {
    if (n < 1 || n > max_vertices)
        throw InfeasibleParameters("vertex count out of range: " + std::to_string(n));
    std::vector<std::vector<int>> adjacency(n, std::vector<int>(n, 0));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw NotSimple("edge endpoint out of range");
        if (u == v)
            throw NotSimple("loop at vertex " + std::to_string(u));
        if (adjacency[u][v])
            throw NotSimple("multi-edge between " + std::to_string(u) + " and " +
                            std::to_string(v));
        adjacency[u][v] = adjacency[v][u] = 1;
    }
    return validate(adjacency, expected_degree);
}

int Graph::girth() const {
    // BFS from every vertex; a non-tree edge closing at depths (a, b)
    // witnesses a cycle of length a + b + 1.
    int best = 0;
    for (int s = 0; s < n_; ++s) {
        std::vector<int> dist(n_, -1), parent(n_, -1);
        std::queue<int> queue;
        dist[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (int u : adj_[v]) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push(u);
                } else if (u != parent[v] && parent[u] != v) {
                    const int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best)
                        best = len;
                }
            }
        }
    }
    return best;
}

Graph complete_graph(int n) {
    if (n < 2 || n > Graph::max_vertices)
        throw InfeasibleParameters("complete graph needs 2 <= n <= 62");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a != b)
        throw InfeasibleParameters("complete bipartite graph is regular only for a == b");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw InfeasibleParameters("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
    // Kneser graph K(5,2): vertices are 2-subsets of {0..4}, adjacent iff disjoint.
    std::vector<std::array<int, 2>> subsets;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            subsets.push_back({i, j});
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(subsets.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& s = subsets[i];
            const auto& t = subsets[j];
            const bool disjoint = s[0] != t[0] && s[0] != t[1] && s[1] != t[0] && s[1] != t[1];
            if (disjoint)
                edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges, 3);
}

namespace {

// Diamond block = K4 minus one edge. Local labels: 0 = left port, 1 = top,
// 2 = bottom, 3 = right port; ports have inner degree 2 and one outer link.
void add_diamond(std::vector<std::pair<int, int>>& edges, int base) {
    edges.emplace_back(base + 0, base + 1);
    edges.emplace_back(base + 0, base + 2);
    edges.emplace_back(base + 1, base + 2);
    edges.emplace_back(base + 1, base + 3);
    edges.emplace_back(base + 2, base + 3);
}

// Clasp: five vertices closing one end of a string. Local labels:
// 0 = end, 1 = top, 2 = bottom, 3 = inner, 4 = port (one outer link).
void add_clasp(std::vector<std::pair<int, int>>& edges, int base) {
    edges.emplace_back(base + 0, base + 1);
    edges.emplace_back(base + 0, base + 2);
    edges.emplace_back(base + 0, base + 3);
    edges.emplace_back(base + 3, base + 1);
    edges.emplace_back(base + 3, base + 2);
    edges.emplace_back(base + 4, base + 1);
    edges.emplace_back(base + 4, base + 2);
}

} // namespace

Graph string_of_diamonds(int n) {
    if (n < 8 || n % 2 != 0 || n > Graph::max_vertices)
        throw InfeasibleParameters("string of diamonds needs even n >= 8");

    std::vector<std::pair<int, int>> edges;
    if (n % 4 == 0) {
        // Closed loop of n/4 diamonds, right port to next left port.
        const int k = n / 4;
        for (int i = 0; i < k; ++i)
            add_diamond(edges, 4 * i);
        for (int i = 0; i < k; ++i)
            edges.emplace_back(4 * i + 3, 4 * ((i + 1) % k));
    } else {
        // Open string with a clasp at each end: clasp + diamonds + clasp.
        const int k = (n - 10) / 4;
        add_clasp(edges, 0);
        int left_port = 4;
        for (int i = 0; i < k; ++i) {
            const int base = 5 + 4 * i;
            add_diamond(edges, base);
            edges.emplace_back(left_port, base);
            left_port = base + 3;
        }
        const int base = n - 5;
        // Mirrored clasp: port first so the outer link attaches naturally.
        edges.emplace_back(base + 0, base + 1);
        edges.emplace_back(base + 0, base + 2);
        edges.emplace_back(base + 3, base + 1);
        edges.emplace_back(base + 3, base + 2);
        edges.emplace_back(base + 4, base + 1);
        edges.emplace_back(base + 4, base + 2);
        edges.emplace_back(base + 4, base + 3);
        edges.emplace_back(left_port, base);
    }
    return Graph::from_edges(n, edges, 3);
}

} // namespace filar
