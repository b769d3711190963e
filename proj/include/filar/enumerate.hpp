#pragma once

#include "filar/graph.hpp"

namespace filar {

/// All connected d-regular graphs on n vertices, one per isomorphism
/// class, sorted by canonical form. Orderly generation: adjacency rows are
/// extended vertex by vertex in discovery order, branches that are beaten
/// by an adjacent label swap are cut, and survivors are deduplicated by
/// canonical form.
///
/// Desk-scale guard: d=3 up to n=14 (n=16 with allow_long_runs), d=4 up to
/// n=8 (n=10 with the flag), d<=2 unrestricted.
GraphFamily enumerate_regular(int n, int d, bool allow_long_runs = false);

} // namespace filar
