#pragma once

namespace filar {

/// Modified Bessel function of the first kind,
/// I_m(z) = sum_r (z/2)^(m+2r) / (r! (m+r)!),
/// by direct series summation: terms are added until the next one drops
/// below 1e-18 of the running sum. Valid for 0 <= z <= 10, 0 <= m <= 200.
double bessel_I(int m, double z);

} // namespace filar
