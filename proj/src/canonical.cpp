#include "filar/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "filar/graph6.hpp"

namespace filar {

namespace {

// Rows of the relabeled adjacency matrix with column j stored at bit
// (63 - j), so that an unsigned comparison of row words is the
// lexicographic comparison of the matrix row read left to right.
using Word = std::vector<std::uint64_t>;

Word relabeled_word(const Graph& g, const std::vector<int>& new_label) {
    const int n = g.order();
    Word word(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            word[new_label[v]] |= std::uint64_t{1} << (63 - new_label[u]);
    return word;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<int> run() {
        std::vector<int> color(n_, 0);
        search(color, 1);
        return best_label_;
    }

private:
    // Equitable refinement: split color classes by the multiset of
    // neighbor colors until stable. New class ids are assigned in an
    // isomorphism-invariant order (old color first, then signature).
    static void refine(const Graph& g, std::vector<int>& color, int& ncolors) {
        const int n = g.order();
        std::vector<std::vector<int>> sig(n);
        for (;;) {
            for (int v = 0; v < n; ++v) {
                sig[v].assign(1 + ncolors, 0);
                sig[v][0] = color[v];
                for (int u : g.neighbors(v))
                    ++sig[v][1 + color[u]];
            }
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v)
                order[v] = v;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return sig[a] < sig[b];
            });
            int next = 0;
            std::vector<int> fresh(n);
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]])
                    ++next;
                fresh[order[i]] = next;
            }
            const int count = next + 1;
            if (count == ncolors)
                return;
            color = fresh;
            ncolors = count;
        }
    }

    void search(std::vector<int> color, int ncolors) {
        refine(g_, color, ncolors);
        if (ncolors == n_) {
            Word word = relabeled_word(g_, color);
            if (best_label_.empty() || word > best_word_) {
                best_word_ = std::move(word);
                best_label_ = color;
            }
            return;
        }
        // Branch on the first non-singleton color class.
        int target = -1;
        std::vector<int> counts(ncolors, 0);
        for (int v = 0; v < n_; ++v)
            ++counts[color[v]];
        for (int c = 0; c < ncolors; ++c)
            if (counts[c] > 1) {
                target = c;
                break;
            }
        for (int v = 0; v < n_; ++v) {
            if (color[v] != target)
                continue;
            std::vector<int> child(color);
            for (int u = 0; u < n_; ++u)
                if (child[u] > target || (child[u] == target && u != v))
                    ++child[u];
            child[v] = target;
            search(std::move(child), ncolors + 1);
        }
    }

    const Graph& g_;
    int n_;
    Word best_word_;
    std::vector<int> best_label_;
};

} // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    return CanonicalSearch(g).run();
}

Graph apply_labeling(const Graph& g, const std::vector<int>& new_label) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u > v)
                edges.emplace_back(new_label[v], new_label[u]);
    return Graph::from_edges(n, edges, g.degree());
}

std::string canonical_form(const Graph& g) {
    return graph6_encode(apply_labeling(g, canonical_labeling(g)));
}

} // namespace filar
