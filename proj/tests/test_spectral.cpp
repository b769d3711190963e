#include <doctest.h>

#include <cmath>
#include <random>

#include "filar/enumerate.hpp"
#include "filar/spectral.hpp"
#include "helpers.hpp"

using namespace filar;
using namespace filar::testing;

namespace {

// Integer determinant via fraction-free (Bareiss) elimination.
__int128 integer_determinant(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = m[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<std::vector<long long>> a_minus_lambda(const Graph& g, long long lambda) {
    const int n = g.order();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int v = 0; v < n; ++v) {
        m[v][v] = -lambda;
        for (int u : g.neighbors(v))
            m[v][u] = 1;
    }
    return m;
}

// Inverse iteration for one eigenvector; returns the residual |A v - lambda v|_inf.
double inverse_iteration_residual(const Graph& g, double lambda) {
    const int n = g.order();
    // tiny offset keeps the factorization nonsingular; it floors the
    // attainable residual, so it must sit well below the 1e-8 target
    const double shift = lambda + 1e-10;
    std::vector<std::vector<double>> lu(n, std::vector<double>(n, 0));
    for (int v = 0; v < n; ++v) {
        lu[v][v] = -shift;
        for (int u : g.neighbors(v))
            lu[v][u] = 1.0;
    }
    std::vector<int> piv(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(lu[i][k]) > std::abs(lu[p][k]))
                p = i;
        std::swap(lu[k], lu[p]);
        piv[k] = p;
        for (int i = k + 1; i < n; ++i) {
            lu[i][k] /= lu[k][k];
            for (int j = k + 1; j < n; ++j)
                lu[i][j] -= lu[i][k] * lu[k][j];
        }
    }
    auto solve = [&](std::vector<double> b) {
        for (int k = 0; k < n; ++k) {
            std::swap(b[k], b[piv[k]]);
            for (int i = k + 1; i < n; ++i)
                b[i] -= lu[i][k] * b[k];
        }
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j)
                b[i] -= lu[i][j] * b[j];
            b[i] /= lu[i][i];
        }
        return b;
    };

    std::mt19937 rng(42);
    std::uniform_real_distribution<double> uniform(-1, 1);
    std::vector<double> v(n);
    for (double& x : v)
        x = uniform(rng);
    for (int iter = 0; iter < 4; ++iter) {
        v = solve(std::move(v));
        double norm = 0;
        for (double x : v)
            norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v)
            x /= norm;
    }
    double residual = 0;
    for (int i = 0; i < n; ++i) {
        double av = 0;
        for (int u : g.neighbors(i))
            av += v[u];
        residual = std::max(residual, std::abs(av - lambda * v[i]));
    }
    return residual;
}

bool close_multiset(const std::vector<double>& got, const std::vector<double>& want,
                    double tol) {
    if (got.size() != want.size())
        return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - want[i]) > tol)
            return false;
    return true;
}

} // namespace

TEST_CASE("K4 spectrum is {3, -1, -1, -1}") {
    const auto eig = adjacency_eigenvalues(complete_graph(4));
    CHECK(close_multiset(eig, {3, -1, -1, -1}, 1e-12));
}

TEST_CASE("K33 spectrum is {3, 0 x4, -3}") {
    const auto eig = adjacency_eigenvalues(complete_bipartite(3, 3));
    CHECK(close_multiset(eig, {3, 0, 0, 0, 0, -3}, 1e-12));
}

TEST_CASE("Petersen spectrum is {3, 1 x5, -2 x4}") {
    const Graph petersen = petersen_graph();
    // char-poly oracle: det(A - lambda I) vanishes exactly at 3, 1, -2
    CHECK(integer_determinant(a_minus_lambda(petersen, 3)) == 0);
    CHECK(integer_determinant(a_minus_lambda(petersen, 1)) == 0);
    CHECK(integer_determinant(a_minus_lambda(petersen, -2)) == 0);
    CHECK(integer_determinant(a_minus_lambda(petersen, 2)) != 0);
    // multiplicities (1, 5, 4) are forced by sum = 0 and sum of squares = 30
    const auto eig = adjacency_eigenvalues(petersen);
    CHECK(close_multiset(eig, {3, 1, 1, 1, 1, 1, -2, -2, -2, -2}, 1e-12));
}

TEST_CASE("summary statistics match the closed forms") {
    const SpectralSummary k4 = summarize(complete_graph(4));
    CHECK(k4.mu == doctest::Approx((std::exp(1.0) + 3 * std::exp(-1.0 / 3)) / 4)
                       .epsilon(1e-12));
    CHECK(k4.power_sum(2) == doctest::Approx(12).epsilon(1e-12));

    const SpectralSummary petersen = summarize(petersen_graph());
    CHECK(petersen.mu ==
          doctest::Approx((std::exp(1.0) + 5 * std::exp(1.0 / 3) + 4 * std::exp(-2.0 / 3)) / 10)
              .epsilon(1e-12));

    CHECK(petersen.sigma_unbiased ==
          doctest::Approx(petersen.sigma_biased * 10.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues reproduce integer trace powers across a family") {
    for (const Graph& g : enumerate_regular(8, 3).graphs) {
        const SpectralSummary s = summarize(g);
        CHECK(std::abs(s.eigenvalues.front() - 3) < 1e-10);
        for (double lambda : s.eigenvalues)
            CHECK(std::abs(lambda) <= 3 + 1e-10);
        for (int k = 1; k <= 4; ++k) {
            const double exact = static_cast<double>(adjacency_trace_power(g, k));
            const double tol = 1e-8 * g.order() * std::pow(3.0, k);
            CHECK(std::abs(s.power_sum(k) - exact) < tol);
        }
        CHECK(s.mu > 1); // convexity: zero-mean exponentials average above 1
    }
}

TEST_CASE("inverse-iteration residual spot check") {
    const GraphFamily family = enumerate_regular(10, 3);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick_graph(0, family.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph& g = family.graphs[pick_graph(rng)];
        const auto eig = adjacency_eigenvalues(g);
        std::uniform_int_distribution<std::size_t> pick_eig(0, eig.size() - 1);
        const double lambda = eig[pick_eig(rng)];
        CHECK(inverse_iteration_residual(g, lambda) < 1e-8);
    }
}
