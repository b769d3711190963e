#include "filar/trace_formula.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "filar/bessel.hpp"
#include "filar/geodesics.hpp"
#include "filar/spectral.hpp"

namespace filar {

namespace {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Quadrature gauss_legendre(int order) {
    Quadrature rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = 0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            dp = order * (x * p0 - p1) / (x * x - 1);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
        rule.weights[order - 1 - i] = rule.weights[i];
    }
    return rule;
}

const Quadrature& cached_rule(int order) {
    static const std::map<int, Quadrature> rules = [] {
        std::map<int, Quadrature> r;
        for (int order = 16; order <= 2048; order *= 2)
            r.emplace(order, gauss_legendre(order));
        return r;
    }();
    return rules.at(order);
}

} // namespace

double kesten_integral_J(double t, int q) {
    if (q < 2)
        throw DomainError("kesten_integral_J requires q >= 2");
    if (std::abs(t) > 2)
        throw DomainError("kesten_integral_J requires |t| <= 2");

    // After s = 2 sqrt(q) cos(theta):
    // J(t) = 2 q (q+1) / pi * int_0^pi e^{2 sqrt(q) t cos(theta)}
    //        sin^2(theta) / ((q+1)^2 - 4 q cos^2(theta)) dtheta.
    const double zq = 2 * std::sqrt(static_cast<double>(q));
    const double dsq = static_cast<double>(q + 1) * (q + 1);
    auto integrand = [&](double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return std::exp(zq * t * c) * s * s / (dsq - 4 * q * c * c);
    };

    double previous = std::numeric_limits<double>::quiet_NaN();
    for (int order = 16; order <= 2048; order *= 2) {
        const Quadrature& rule = cached_rule(order);
        double sum = 0;
        for (int i = 0; i < order; ++i) {
            const double theta = std::numbers::pi * (rule.nodes[i] + 1) / 2;
            sum += rule.weights[i] * integrand(theta);
        }
        const double value = sum * (std::numbers::pi / 2) * 2 * q * (q + 1) / std::numbers::pi;
        if (std::abs(value - previous) < 1e-13)
            return value;
        previous = value;
    }
    return previous;
}

double geodesic_kernel_F(int len, double t, int q) {
    if (len < 3)
        throw DomainError("geodesic_kernel_F requires length >= 3");
    if (t < 0 || t > 1)
        throw DomainError("geodesic_kernel_F requires 0 <= t <= 1");
    if (q < 2)
        throw DomainError("geodesic_kernel_F requires q >= 2");

    const double z = 2 * std::sqrt(static_cast<double>(q)) * t;
    double sum = 0;
    for (int k = 1;; ++k) {
        if (k * len > 200)
            break; // far beyond the 1e-18 threshold on this domain
        const double term =
            bessel_I(k * len, z) / std::pow(static_cast<double>(q), k * len / 2.0);
        sum += term;
        if (term < 1e-18)
            break;
    }
    return sum;
}

double geodesic_tail_bound(int cutoff, double t, int q, int degree) {
    if (t == 0)
        return 0;
    // (2/n) l m_l F_l(t) <= d q^(l-1) Fbar_l(t), where with p = t^l / l!
    //   Fbar_l(t) = e^{q t^2} sum_k t^(kl) / (kl)!  <=  e^{q t^2} (p + 2 p^2)
    // using (z/2)^m / q^(m/2) = t^m, (2l)! >= (l!)^2, and a ratio < 1/2
    // between consecutive k-terms for t <= 1.
    const double envelope = std::exp(q * t * t);
    double p = 1;
    for (int i = 1; i <= cutoff + 1; ++i)
        p *= t / i;

    double bound = 0;
    double qpow = std::pow(static_cast<double>(q), cutoff);
    for (int len = cutoff + 1; len <= cutoff + 400; ++len) {
        const double term = degree * qpow * envelope * (p + 2 * p * p);
        bound += term;
        qpow *= q;
        p *= t / (len + 1);
        if (term < 1e-30 * bound || term < 1e-300)
            break;
    }
    return bound;
}

int auto_cutoff(double t, int q, int degree) {
    for (int cutoff = 3; cutoff <= 60; ++cutoff)
        if (geodesic_tail_bound(cutoff, t, q, degree) < 1e-10)
            return cutoff;
    throw TailBoundNotMet("no cutoff <= 60 brings the geodesic tail below 1e-10");
}

TraceReport verify_trace_formula(const Graph& g, double t, int cutoff) {
    if (t < 0 || t > 1)
        throw DomainError("verify_trace_formula requires 0 <= t <= 1");
    const int n = g.order();
    const int q = g.degree() - 1;
    if (q < 2)
        throw DomainError("verify_trace_formula requires degree >= 3");

    TraceReport report;
    report.t = t;
    report.cutoff = cutoff > 0 ? cutoff : auto_cutoff(t, q, g.degree());
    report.tail_bound = geodesic_tail_bound(report.cutoff, t, q, g.degree());

    double lhs = 0;
    for (double lambda : adjacency_eigenvalues(g))
        lhs += std::exp(t * lambda);
    report.lhs = lhs / n;

    const GeodesicSpectrum spectrum = length_spectrum(g, report.cutoff);
    double geodesic = 0;
    for (const auto& [len, mult] : spectrum.multiplicities)
        if (mult > 0)
            geodesic += static_cast<double>(len) * static_cast<double>(mult) *
                        geodesic_kernel_F(len, t, q);
    report.rhs = kesten_integral_J(t, q) + 2.0 / n * geodesic;
    report.residual = std::abs(report.lhs - report.rhs);
    return report;
}

TestSequence TestSequence::from_signed(const std::vector<double>& values) {
    if (values.empty() || values.size() % 2 == 0)
        throw AsymmetricTestFunction("signed window must have odd length");
    const int offset = static_cast<int>(values.size()) / 2;
    for (int k = 1; k <= offset; ++k)
        if (values[offset + k] != values[offset - k])
            throw AsymmetricTestFunction("h(n) != h(-n) at n = " + std::to_string(k));
    TestSequence h;
    h.values_.assign(values.begin() + offset, values.end());
    return h;
}

TestSequence TestSequence::from_nonnegative(std::vector<double> values) {
    if (values.empty())
        values.push_back(0);
    TestSequence h;
    h.values_ = std::move(values);
    return h;
}

TestSequence TestSequence::bessel_window(double t, int q) {
    const double z = 2 * std::sqrt(static_cast<double>(q)) * t;
    std::vector<double> values;
    for (int m = 0; m <= 200; ++m) {
        const double v = bessel_I(m, z);
        values.push_back(v);
        if (m > 0 && v < 1e-18)
            break;
    }
    return from_nonnegative(std::move(values));
}

double TestSequence::at(int n) const {
    const int k = std::abs(n);
    return k < static_cast<int>(values_.size()) ? values_[k] : 0.0;
}

namespace {

// hhat(z) = sum_n h(n) z^-n = h(0) + sum_{n>=1} h(n) (z^n + z^-n).
std::complex<double> hhat(const TestSequence& h, std::complex<double> z) {
    std::complex<double> sum = h.at(0);
    std::complex<double> zp = 1.0, zm = 1.0;
    const std::complex<double> zinv = 1.0 / z;
    for (int n = 1; n <= h.support(); ++n) {
        zp *= z;
        zm *= zinv;
        sum += h.at(n) * (zp + zm);
    }
    return sum;
}

} // namespace

TraceReport general_trace_formula(const Graph& g, const TestSequence& h) {
    const int n = g.order();
    const int q = g.degree() - 1;
    if (q < 2)
        throw DomainError("general_trace_formula requires degree >= 3");
    const double sq = std::sqrt(static_cast<double>(q));

    TraceReport report;
    report.t = std::numeric_limits<double>::quiet_NaN();
    report.cutoff = std::max(3, h.support());
    report.tail_bound = 0; // finite support: the geodesic sum is exact

    // Spectral side: lambda_i = sqrt(q) (z_i + 1/z_i); either root gives
    // the same hhat since the evaluation is symmetric under z <-> 1/z.
    double lhs = 0;
    for (double lambda : adjacency_eigenvalues(g)) {
        const double x = lambda / sq;
        std::complex<double> z;
        if (std::abs(x) <= 2) {
            const double theta = std::acos(std::clamp(x / 2, -1.0, 1.0));
            z = std::polar(1.0, theta);
        } else {
            const double root = (std::abs(x) + std::sqrt(x * x - 4)) / 2;
            z = (x > 0) ? root : -root;
        }
        lhs += hhat(h, z).real();
    }
    report.lhs = lhs;

    // Contour term by the trapezoid rule, doubling until stable.
    auto contour_at = [&](int points) {
        double sum = 0;
        for (int j = 0; j < points; ++j) {
            const double theta = 2 * std::numbers::pi * j / points;
            const std::complex<double> z = std::polar(1.0, theta);
            const std::complex<double> weight =
                (1.0 - z * z) / (static_cast<double>(q) - z * z);
            sum += (hhat(h, z) * weight).real();
        }
        return n * q * sum / points;
    };
    int points = 64;
    double contour = contour_at(points);
    for (points *= 2; points <= (1 << 16); points *= 2) {
        const double refined = contour_at(points);
        const bool settled = std::abs(refined - contour) < 1e-12;
        contour = refined;
        if (settled)
            break;
    }

    // Geodesic sum: only multiples k*l inside the support contribute.
    double geodesic = 0;
    if (h.support() >= 3) {
        const GeodesicSpectrum spectrum = length_spectrum(g, std::min(h.support(), 60));
        for (const auto& [len, mult] : spectrum.multiplicities) {
            if (mult == 0)
                continue;
            for (int k = 1; k * len <= h.support(); ++k) {
                const double value = h.at(k * len);
                if (value != 0)
                    geodesic += 2.0 * static_cast<double>(mult) * len *
                                std::pow(static_cast<double>(q), -k * len / 2.0) * value;
            }
        }
    }

    report.rhs = contour + geodesic;
    report.residual = std::abs(report.lhs - report.rhs);
    return report;
}

} // namespace filar
