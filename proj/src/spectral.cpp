#include "filar/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace filar {

namespace {

// Householder reduction to tridiagonal form. On return diag holds the
// diagonal and sub[i] the entry between rows i and i+1 (sub[n-1] unused).
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& diag,
                    std::vector<double>& sub) {
    auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
    std::vector<double> u(n), w(n);

    for (int k = 0; k < n - 2; ++k) {
        double norm2 = 0;
        for (int i = k + 1; i < n; ++i)
            norm2 += at(i, k) * at(i, k);
        const double norm = std::sqrt(norm2);
        if (norm == 0)
            continue;

        const double x0 = at(k + 1, k);
        const double alpha = (x0 >= 0) ? -norm : norm;
        double unorm2 = norm2 - 2 * alpha * x0 + alpha * alpha;
        if (unorm2 == 0)
            continue;
        for (int i = 0; i <= k; ++i)
            u[i] = 0;
        u[k + 1] = x0 - alpha;
        for (int i = k + 2; i < n; ++i)
            u[i] = at(i, k);
        const double inv = 1.0 / std::sqrt(unorm2);
        for (int i = k + 1; i < n; ++i)
            u[i] *= inv;

        // A <- H A H with H = I - 2 u u^T:
        // w = A u, c = u^T w, A -= 2 u w^T + 2 w u^T - 4 c u u^T.
        double c = 0;
        for (int i = 0; i < n; ++i) {
            double s = 0;
            for (int j = k + 1; j < n; ++j)
                s += at(i, j) * u[j];
            w[i] = s;
        }
        for (int i = k + 1; i < n; ++i)
            c += u[i] * w[i];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                at(i, j) += -2 * u[i] * w[j] - 2 * w[i] * u[j] + 4 * c * u[i] * u[j];
    }

    for (int i = 0; i < n; ++i)
        diag[i] = at(i, i);
    for (int i = 0; i < n - 1; ++i)
        sub[i] = at(i + 1, i);
    sub[n - 1] = 0;
}

// Implicit-shift QL on a symmetric tridiagonal matrix; diag becomes the
// unordered eigenvalues. Cap of 50 sweeps per eigenvalue.
void ql_implicit(std::vector<double>& diag, std::vector<double>& sub, int n) {
    constexpr int max_sweeps = 50;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            while (m < n - 1) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(sub[m]) <= 1e-300 || std::abs(sub[m]) <= 2.3e-16 * dd)
                    break;
                ++m;
            }
            if (m == l)
                break;
            if (++iter > max_sweeps)
                throw ConvergenceFailure("QL iteration did not converge");

            double g = (diag[l + 1] - diag[l]) / (2 * sub[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + sub[l] / (g + std::copysign(r, g));
            double s = 1, c = 1, p = 0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * sub[i];
                const double b = c * sub[i];
                r = std::hypot(f, g);
                sub[i + 1] = r;
                if (r == 0) {
                    diag[i + 1] -= p;
                    sub[m] = 0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                if (i == l) {
                    diag[l] -= p;
                    sub[l] = g;
                    sub[m] = 0;
                }
            }
        }
    }
}

} // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n) {
    if (n == 1)
        return {matrix[0]};
    std::vector<double> diag(n), sub(n);
    tridiagonalize(matrix, n, diag, sub);
    ql_implicit(diag, sub, n);
    std::sort(diag.begin(), diag.end());
    return diag;
}

std::vector<double> adjacency_eigenvalues(const Graph& g) {
    const int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            a[static_cast<std::size_t>(v) * n + u] = 1.0;
    std::vector<double> eig = symmetric_eigenvalues(std::move(a), n);
    std::reverse(eig.begin(), eig.end());
    return eig;
}

SpectralSummary summarize(const Graph& g) {
    SpectralSummary s;
    s.eigenvalues = adjacency_eigenvalues(g);
    const int n = g.order();
    const double d = g.degree();

    s.power_sums.assign(4, 0.0);
    for (double lambda : s.eigenvalues) {
        double p = lambda;
        for (int k = 0; k < 4; ++k) {
            s.power_sums[k] += p;
            p *= lambda;
        }
    }

    double mean = 0;
    for (double lambda : s.eigenvalues)
        mean += std::exp(lambda / d);
    mean /= n;
    s.mu = mean;

    double ss = 0;
    for (double lambda : s.eigenvalues) {
        const double dev = std::exp(lambda / d) - mean;
        ss += dev * dev;
    }
    s.sigma_biased = ss / n;
    s.sigma_unbiased = (n > 1) ? ss / (n - 1) : 0.0;
    return s;
}

} // namespace filar
