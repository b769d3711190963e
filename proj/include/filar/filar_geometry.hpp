#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace filar {

/// Geometry of the clusters in the (mean, variance) plane for regular
/// graphs of degree q+1 on n vertices. A "level" is the geodesic length
/// whose multiplicity labels the split: level 3 groups graphs by triangle
/// count into filars, level 4 splits filars into subfilars, and so on.
struct FilarModel {
    int q = 2;
    int level = 3;
    int n = 0;

    double base_x = 0; // J(1/3)
    double base_y = 0; // J(2/3) - J(1/3)^2

    /// Slope of the level's line segments: the group labeled by
    /// (m_3..m_level) varies along F_{level+1}, so this is
    /// F_{level+1}(2/3) / F_{level+1}(1/3) - 2 J(1/3).
    double slope = 0;

    /// Horizontal distance between neighboring groups per unit of m_level.
    double spacing = 0;

    /// Shift of the anchor x-coordinate per unit of m_level: 2*level*F_level(1/3)/n.
    double unit_shift_x = 0;

    /// Point the group's line passes through, from the counts m_3..m_level.
    std::pair<double, double> anchor(const std::vector<std::int64_t>& counts) const;
};

/// Slope of the line along which points with varying m_len spread:
/// F_len(2/3)/F_len(1/3) - 2 J(1/3). At len = 3 this is the top-level
/// slope ~7.079, at 4 the filar slope ~15.89, at 5 the subfilar ~33.36.
double filar_line_slope(int len, int q);

/// Horizontal spacing of level-l groups per unit of m_l:
/// (2l/n) * (F_l(1/3) - F_{l+1}(1/3) * (F_l(2/3) - 2J F_l(1/3)) / (F_{l+1}(2/3) - 2J F_{l+1}(1/3))).
/// Scales exactly as 1/n.
double filar_spacing(int level, int n, int q);

FilarModel filar_geometry(int q, int level, int n);

struct PredictedPoint {
    double mu = 0;           // J(1/3) + (2/n) sum l m_l F_l(1/3)
    double sigma_exact = 0;  // J(2/3) + (2/n) sum l m_l F_l(2/3) - mu^2
    double sigma_approx = 0; // base_y + (2/n) sum l m_l (F_l(2/3) - 2 J(1/3) F_l(1/3))
};

/// Evaluates the closed-form mean and both variance forms from geodesic
/// multiplicities truncated at their cutoff.
PredictedPoint predict_point(const std::map<int, std::int64_t>& multiplicities,
                             int n, int q);

} // namespace filar
