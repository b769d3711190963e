#pragma once

#include <string>
#include <vector>

#include "filar/graph.hpp"

namespace filar {

/// Relabeling that maximizes the adjacency bit matrix read row-major
/// (color refinement plus backtracking over individualization choices).
/// new_label[v] is the canonical index of vertex v.
std::vector<int> canonical_labeling(const Graph& g);

Graph apply_labeling(const Graph& g, const std::vector<int>& new_label);

/// Canonical byte string: graph6 line of the canonically relabeled graph.
/// Equal strings iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

} // namespace filar
