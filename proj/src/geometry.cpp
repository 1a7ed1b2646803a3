#include "qgw/geometry.hpp"

#include "qgw/errors.hpp"

#include <numeric>
#include <string>

namespace qgw {

void GeometrySpec::validate() const
{
    if (n < 2)
        throw InvalidSpec("invalid geometry: n = " + std::to_string(n) + " but n >= 2 is required");
    for (int degree : l)
        if (degree < 1)
            throw InvalidSpec("invalid geometry: hypersurface degree " + std::to_string(degree) +
                              " is not positive");
    for (int degree : lp)
        if (degree < 1)
            throw InvalidSpec("invalid geometry: bundle degree " + std::to_string(degree) +
                              " is not positive");
    const int total = std::accumulate(l.begin(), l.end(), 0) +
                      std::accumulate(lp.begin(), lp.end(), 0);
    if (total != n)
        throw InvalidSpec("invalid geometry: sum(l) + sum(lp) = " + std::to_string(total) +
                          " does not equal n = " + std::to_string(n));
}

Rational GeometrySpec::kappa() const
{
    Rational value(1);
    for (int degree : l)
        value *= pow_int(Rational(degree), degree);
    for (int degree : lp)
        value *= pow_int(Rational(-degree), degree);
    return value;
}

} // namespace qgw
