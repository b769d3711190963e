#include "filar/filar_geometry.hpp"

#include "filar/errors.hpp"
#include "filar/trace_formula.hpp"

namespace filar {

std::pair<double, double> FilarModel::anchor(const std::vector<std::int64_t>& counts) const {
    if (static_cast<int>(counts.size()) != level - 2)
        throw DomainError("anchor needs exactly the counts m_3..m_level");
    double x = base_x;
    double y = base_y;
    const double j13 = base_x;
    for (int i = 0; i < static_cast<int>(counts.size()); ++i) {
        const int len = 3 + i;
        const double f13 = geodesic_kernel_F(len, 1.0 / 3.0, q);
        const double f23 = geodesic_kernel_F(len, 2.0 / 3.0, q);
        x += 2.0 * len * counts[i] * f13 / n;
        y += 2.0 * len * counts[i] * (f23 - 2 * j13 * f13) / n;
    }
    return {x, y};
}

double filar_line_slope(int len, int q) {
    const double j13 = kesten_integral_J(1.0 / 3.0, q);
    return geodesic_kernel_F(len, 2.0 / 3.0, q) / geodesic_kernel_F(len, 1.0 / 3.0, q) -
           2 * j13;
}

double filar_spacing(int level, int n, int q) {
    if (n < 1)
        throw DomainError("spacing needs n >= 1");
    const double j13 = kesten_integral_J(1.0 / 3.0, q);
    const double fa13 = geodesic_kernel_F(level, 1.0 / 3.0, q);
    const double fa23 = geodesic_kernel_F(level, 2.0 / 3.0, q);
    const double fb13 = geodesic_kernel_F(level + 1, 1.0 / 3.0, q);
    const double fb23 = geodesic_kernel_F(level + 1, 2.0 / 3.0, q);
    const double projected = fa13 - fb13 * (fa23 - 2 * j13 * fa13) / (fb23 - 2 * j13 * fb13);
    return 2.0 * level * projected / n;
}

FilarModel filar_geometry(int q, int level, int n) {
    if (level < 3)
        throw DomainError("filar level starts at 3 (triangles)");
    FilarModel model;
    model.q = q;
    model.level = level;
    model.n = n;
    model.base_x = kesten_integral_J(1.0 / 3.0, q);
    model.base_y = kesten_integral_J(2.0 / 3.0, q) - model.base_x * model.base_x;
    model.slope = filar_line_slope(level + 1, q);
    model.spacing = filar_spacing(level, n, q);
    model.unit_shift_x = 2.0 * level * geodesic_kernel_F(level, 1.0 / 3.0, q) / n;
    return model;
}

PredictedPoint predict_point(const std::map<int, std::int64_t>& multiplicities,
                             int n, int q) {
    const double j13 = kesten_integral_J(1.0 / 3.0, q);
    const double j23 = kesten_integral_J(2.0 / 3.0, q);

    double sum13 = 0, sum23 = 0;
    for (const auto& [len, mult] : multiplicities) {
        if (mult == 0)
            continue;
        sum13 += static_cast<double>(len) * static_cast<double>(mult) *
                 geodesic_kernel_F(len, 1.0 / 3.0, q);
        sum23 += static_cast<double>(len) * static_cast<double>(mult) *
                 geodesic_kernel_F(len, 2.0 / 3.0, q);
    }

    PredictedPoint point;
    point.mu = j13 + 2.0 * sum13 / n;
    point.sigma_exact = j23 + 2.0 * sum23 / n - point.mu * point.mu;
    point.sigma_approx = (j23 - j13 * j13) + 2.0 * (sum23 - 2 * j13 * sum13) / n;
    return point;
}

} // namespace filar
