#pragma once

#include <string>

#include "filar/graph.hpp"

namespace filar {

/// Encodes a graph as one short-form graph6 line (no trailing newline):
/// header byte n+63, then the upper triangle in column-major order packed
/// 6 bits per byte, each byte offset by 63.
std::string graph6_encode(const Graph& g);

/// Decodes a short-form graph6 line (n <= 62). The decoded structure must
/// satisfy all Graph invariants; validation errors propagate.
Graph graph6_decode(const std::string& line);

} // namespace filar
