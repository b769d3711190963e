#include "filar/bessel.hpp"

#include "filar/errors.hpp"

namespace filar {

double bessel_I(int m, double z) {
    if (m < 0 || m > 200)
        throw DomainError("bessel_I order must be in [0, 200]");
    if (z < 0 || z > 10)
        throw DomainError("bessel_I argument must be in [0, 10]");

    const double half = z / 2;
    // Leading term (z/2)^m / m!. Stays within double range on the whole
    // envelope: (z/2)^m <= 5^200 ~ 6e139 and the running division by i
    // keeps intermediate values bounded by the largest partial product.
    double term = 1.0;
    for (int i = 1; i <= m; ++i)
        term *= half / i;

    double sum = term;
    for (int r = 1; r < 400; ++r) {
        term *= half * half / (static_cast<double>(r) * (m + r));
        sum += term;
        if (term == 0 || term < 1e-18 * sum)
            break;
    }
    return sum;
}

} // namespace filar
