#pragma once

#include <map>
#include <vector>

#include "filar/graph.hpp"

namespace filar {

/// Kesten-McKay integral term of the trace formula,
///   J(t) = (q+1)/(2 pi) * int_{-2 sqrt q}^{2 sqrt q}
///          e^{st} sqrt(4q - s^2) / ((q+1)^2 - s^2) ds.
/// The substitution s = 2 sqrt(q) cos(theta) removes the endpoint
/// singularity; the smooth integrand is handled by Gauss-Legendre with
/// order doubling until two orders agree to 1e-13. Requires q >= 2, |t| <= 2.
double kesten_integral_J(double t, int q);

/// Geodesic kernel F_l(t) = sum_{k>=1} I_{kl}(2 sqrt(q) t) / q^{kl/2},
/// truncated when a term drops below 1e-18. Requires l >= 3, 0 <= t <= 1.
double geodesic_kernel_F(int len, double t, int q);

/// Rigorous bound on sum_{l > cutoff} (2/n) l m_l F_l(t) using
/// m_l <= n d q^{l-1} / (2 l) and I_m(z) <= (z/2)^m e^{z^2/4} / m!.
double geodesic_tail_bound(int cutoff, double t, int q, int degree);

/// Smallest cutoff (<= 60) whose tail bound is below 1e-10; throws
/// TailBoundNotMet if none qualifies.
int auto_cutoff(double t, int q, int degree);

struct TraceReport {
    double t = 0;          // evaluation point (NaN for sequence-based reports)
    double lhs = 0;        // spectral side
    double rhs = 0;        // integral term plus geodesic sum
    double tail_bound = 0; // bound on the truncated part of the geodesic sum
    double residual = 0;   // |lhs - rhs|
    int cutoff = 0;        // geodesic lengths actually summed
};

/// Checks the trace formula
///   (1/n) sum_i e^{t lambda_i} = J(t) + (2/n) sum_l l m_l F_l(t)
/// on a concrete graph. cutoff = 0 picks the automatic cutoff.
TraceReport verify_trace_formula(const Graph& g, double t, int cutoff = 0);

/// Even, finitely supported real test sequence h(n) = h(-n).
class TestSequence {
public:
    /// values[k] = h(k - offset) for a window centered so that
    /// values.size() == 2*offset + 1; throws AsymmetricTestFunction
    /// unless h(n) == h(-n) exactly.
    static TestSequence from_signed(const std::vector<double>& values);

    /// h given on n >= 0 only; mirrored to negative indices.
    static TestSequence from_nonnegative(std::vector<double> values);

    /// h(n) = I_n(2 sqrt(q) t) truncated where terms fall below 1e-18.
    static TestSequence bessel_window(double t, int q);

    double at(int n) const;
    int support() const { return static_cast<int>(values_.size()) - 1; }

private:
    std::vector<double> values_; // values_[k] = h(k), k >= 0
};

/// General trace formula (even test sequences):
///   sum_i hhat(z_i) = nq/(2 pi i) oint hhat(z) (1-z^2)/(q-z^2) dz/z
///                     + sum_gamma sum_k l(gamma) q^{-k l(gamma)/2} h(k l(gamma)),
/// with lambda_i = sqrt(q) (z_i + 1/z_i). The contour term is integrated
/// by the trapezoid rule on |z| = 1 (spectrally accurate; the poles at
/// +-sqrt(q) are off the circle). Finite support makes the geodesic sum
/// exact, so tail_bound = 0.
TraceReport general_trace_formula(const Graph& g, const TestSequence& h);

} // namespace filar
