#pragma once

#include <vector>

#include "filar/graph.hpp"

namespace filar {

/// Eigenvalues of the adjacency matrix, exponential statistics of the
/// scaled spectrum, and the first power sums.
struct SpectralSummary {
    std::vector<double> eigenvalues; // sorted descending, lambda_1 = d
    std::vector<double> power_sums;  // power_sums[k-1] = sum_i lambda_i^k, k = 1..4
    double mu = 0;                   // mean of exp(lambda_i / d)
    double sigma_biased = 0;         // 1/n * sum (exp(lambda_i/d) - mu)^2
    double sigma_unbiased = 0;       // 1/(n-1) * same

    double power_sum(int k) const { return power_sums.at(k - 1); }
};

/// All eigenvalues of the adjacency matrix, sorted descending.
/// Householder tridiagonalization followed by implicit-shift QL.
std::vector<double> adjacency_eigenvalues(const Graph& g);

/// Eigenvalues of a dense symmetric matrix (row-major, n x n), ascending.
/// Exposed for reuse; throws ConvergenceFailure after 50 sweeps.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n);

SpectralSummary summarize(const Graph& g);

} // namespace filar
