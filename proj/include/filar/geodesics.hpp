#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "filar/graph.hpp"
#include "filar/spectral.hpp"

namespace filar {

/// Non-backtracking (Hashimoto) edge matrix: indexed by directed edges,
/// B[(u->v),(v->w)] = 1 iff w != u. Every row has exactly q = d-1 ones.
struct NonBacktrackingMatrix {
    int dimension = 0;                         // n * d directed edges
    std::vector<std::pair<int, int>> edges;    // edge index -> (u, v)
    std::vector<std::vector<int>> successors;  // edge index -> successor edge indices

    static NonBacktrackingMatrix build(const Graph& g);
};

/// Multiplicities m_l of unoriented primitive closed geodesics, 3 <= l <= cutoff.
struct GeodesicSpectrum {
    int cutoff = 0;
    std::map<int, std::int64_t> multiplicities;

    std::int64_t multiplicity(int len) const {
        auto it = multiplicities.find(len);
        return it == multiplicities.end() ? 0 : it->second;
    }
};

/// tr(B^len) in exact integer arithmetic: the number of based cyclic
/// non-backtracking walks of the given length. Throws OverflowGuard if a
/// count would exceed 64 bits (cannot happen for len <= 40, n <= 62 since
/// tr(B^len) <= n*d*q^(len-1)).
std::int64_t nb_trace(const Graph& g, int len);

/// Traces of B^1..B^cutoff in one pass.
std::vector<std::int64_t> nb_traces(const Graph& g, int cutoff);

/// Length spectrum via the inversion tr(B^l) = sum_{del | l} del * c_del,
/// where c_del counts oriented primitive classes and m_del = c_del / 2.
/// Every intermediate c_del must be non-negative and even, otherwise
/// InversionInconsistency is thrown (an implementation bug, not data).
GeodesicSpectrum length_spectrum(const Graph& g, int cutoff);

struct SpectrumCounts {
    std::int64_t m3 = 0;
    std::int64_t m4 = 0;
    double residual = 0; // largest distance from the real formulas to an integer
};

/// Triangle and quadrilateral counts from eigenvalue power sums:
/// m3 = p3/6, m4 = (p4 - n(q+1)(2q+1))/8, rounded to nearest integers.
/// Throws NonIntegral if the rounding residual exceeds 1e-6.
SpectrumCounts multiplicities_from_spectrum(const SpectralSummary& s, int n, int q);

/// Number of simple cycles of length len (3 <= len <= 6) by exhaustive
/// search; independent oracle for the two routes above. Simple cycles
/// coincide with closed geodesics for len <= 5.
std::int64_t count_short_cycles_bruteforce(const Graph& g, int len);

} // namespace filar
