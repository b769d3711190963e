#include <doctest.h>

#include <cmath>

#include "filar/enumerate.hpp"
#include "filar/trace_formula.hpp"

using namespace filar;

constexpr double third = 1.0 / 3.0;
constexpr double two_thirds = 2.0 / 3.0;

TEST_CASE("Kesten integral reference values") {
    CHECK(kesten_integral_J(0, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kesten_integral_J(0, 3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kesten_integral_J(0, 4) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kesten_integral_J(third, 2) ==
          doctest::Approx(1.1745505374733239).epsilon(1e-12));
    CHECK(kesten_integral_J(two_thirds, 2) ==
          doctest::Approx(1.8012743887183576).epsilon(1e-12));
    CHECK(kesten_integral_J(third, 3) ==
          doctest::Approx(1.2370755217508623).epsilon(1e-12));
    CHECK_THROWS_AS(kesten_integral_J(0.5, 1), DomainError);
    CHECK_THROWS_AS(kesten_integral_J(2.5, 2), DomainError);
}

TEST_CASE("published constants from the geodesic kernels") {
    const double j13 = kesten_integral_J(third, 2);
    CHECK(std::abs(j13 - 1.17455) < 5e-5);
    CHECK(std::abs(kesten_integral_J(two_thirds, 2) - j13 * j13 - 0.4217) < 5e-4);

    const double f313 = geodesic_kernel_F(3, third, 2);
    CHECK(f313 == doctest::Approx(0.0065254573284649328).epsilon(1e-12));
    CHECK(std::abs(f313 - 0.00653) < 5e-5);

    const double f323 = geodesic_kernel_F(3, two_thirds, 2);
    CHECK(f323 == doctest::Approx(0.061520232339128427).epsilon(1e-12));
    CHECK(std::abs(f323 - 2 * j13 * f313 - 0.0462) < 5e-4);

    CHECK(geodesic_kernel_F(4, third, 2) ==
          doctest::Approx(0.00053769742390495242).epsilon(1e-12));
    CHECK(geodesic_kernel_F(5, two_thirds, 2) ==
          doctest::Approx(0.0012706899705369852).epsilon(1e-12));
}

TEST_CASE("kernel positivity and decay") {
    for (double t : {third, two_thirds, 1.0}) {
        double previous = 0;
        for (int len = 3; len <= 20; ++len) {
            const double value = geodesic_kernel_F(len, t, 2);
            CHECK(value > 0);
            if (len > 3)
                CHECK(value < previous);
            previous = value;
        }
    }
    const double j13 = kesten_integral_J(third, 2);
    for (int len = 3; len <= 20; ++len) {
        CHECK(geodesic_kernel_F(len, 0, 2) == 0.0);
        CHECK(geodesic_kernel_F(len, two_thirds, 2) -
                  2 * j13 * geodesic_kernel_F(len, third, 2) >
              0);
    }
}

TEST_CASE("trace formula on K4 matches the closed-form spectral side") {
    const Graph k4 = complete_graph(4);
    const TraceReport report = verify_trace_formula(k4, third);
    CHECK(report.lhs ==
          doctest::Approx((std::exp(1.0) + 3 * std::exp(-third)) / 4).epsilon(1e-13));
    CHECK(report.residual < 1e-10);
    CHECK(report.residual <= report.tail_bound + 1e-12);
}

TEST_CASE("trace formula at t=0 is the measure normalization") {
    const TraceReport report = verify_trace_formula(petersen_graph(), 0);
    CHECK(report.lhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(report.residual < 1e-12);
}

TEST_CASE("trace formula holds across the ten-vertex family") {
    for (const Graph& g : enumerate_regular(10, 3).graphs)
        for (double t : {third, two_thirds}) {
            const TraceReport report = verify_trace_formula(g, t);
            CHECK(report.residual < 1e-9);
            CHECK(report.residual <= report.tail_bound + 1e-12);
        }
}

TEST_CASE("automatic cutoff meets its bound and fails loudly otherwise") {
    const int cutoff = auto_cutoff(two_thirds, 2, 3);
    CHECK(cutoff <= 60);
    CHECK(geodesic_tail_bound(cutoff, two_thirds, 2, 3) < 1e-10);
    CHECK(geodesic_tail_bound(cutoff - 1, two_thirds, 2, 3) >= 1e-10);
    CHECK(auto_cutoff(0, 2, 3) == 3);
    // far outside the cubic regime the bound cannot be met
    CHECK_THROWS_AS(auto_cutoff(1.0, 25, 26), TailBoundNotMet);
}

TEST_CASE("test sequences enforce symmetry") {
    CHECK_NOTHROW(TestSequence::from_signed({1.0, 2.0, 1.0}));
    CHECK_THROWS_AS(TestSequence::from_signed({1.0, 2.0, 3.0}), AsymmetricTestFunction);
    CHECK_THROWS_AS(TestSequence::from_signed({1.0, 2.0}), AsymmetricTestFunction);
    const TestSequence h = TestSequence::from_signed({0.5, 0.0, 2.0, 0.0, 0.5});
    CHECK(h.at(0) == 2.0);
    CHECK(h.at(2) == 0.5);
    CHECK(h.at(-2) == 0.5);
    CHECK(h.at(3) == 0.0);
}

TEST_CASE("general trace formula: indicator at zero gives n on both sides") {
    std::vector<double> window(1, 1.0); // h(0) = 1
    const TestSequence h = TestSequence::from_nonnegative(window);
    for (const Graph& g : {complete_graph(4), petersen_graph()}) {
        const TraceReport report = general_trace_formula(g, h);
        CHECK(report.lhs == doctest::Approx(g.order()).epsilon(1e-12));
        CHECK(report.residual < 1e-10);
    }
}

TEST_CASE("general trace formula: h on {+-3} over K4") {
    std::vector<double> window(4, 0.0);
    window[3] = 1.0;
    const TestSequence h = TestSequence::from_nonnegative(window);
    const TraceReport report = general_trace_formula(complete_graph(4), h);
    // closed form: contour term vanishes (odd harmonics), geodesic sum is
    // 2 m3 * 3 / q^{3/2} = 24 / 2^{3/2} = 6 sqrt(2)
    CHECK(report.lhs == doctest::Approx(8.4852813742385703).epsilon(1e-13));
    CHECK(report.rhs == doctest::Approx(6 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(report.residual < 1e-10);
}

TEST_CASE("general trace formula: h on {+-4} over K4 and K33") {
    std::vector<double> window(5, 0.0);
    window[4] = 1.0;
    const TestSequence h = TestSequence::from_nonnegative(window);

    const TraceReport k4 = general_trace_formula(complete_graph(4), h);
    // lhs = sum z_i^4 + z_i^-4 = 5; contour = -n/4 = -1; geodesics: 6 quads-walks
    CHECK(k4.lhs == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(k4.residual < 1e-10);

    const TraceReport k33 = general_trace_formula(complete_bipartite(3, 3), h);
    CHECK(k33.lhs == doctest::Approx(16.5).epsilon(1e-12));
    CHECK(k33.residual < 1e-10);
}

TEST_CASE("Bessel test sequence reproduces the exponential trace formula") {
    for (const Graph& g :
         {complete_graph(4), complete_bipartite(3, 3), petersen_graph()}) {
        for (double t : {third, two_thirds}) {
            const TestSequence h = TestSequence::bessel_window(t, 2);
            const TraceReport general = general_trace_formula(g, h);
            const TraceReport direct = verify_trace_formula(g, t);
            // The unnormalized sides are n times the averaged ones.
            CHECK(general.lhs / g.order() == doctest::Approx(direct.lhs).epsilon(1e-12));
            CHECK(std::abs(general.lhs / g.order() - direct.rhs) < 1e-9);
            CHECK(general.residual / g.order() < 1e-9);
        }
    }
}
