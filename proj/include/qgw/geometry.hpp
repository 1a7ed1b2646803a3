#pragma once

#include "qgw/rational.hpp"

#include <vector>

namespace qgw {

/* Target geometry: the total space of O(-lp_1) + ... + O(-lp_m) over a
 * complete intersection of degrees l_1..l_r in P^{n-1}, subject to the
 * Calabi-Yau balance sum(l) + sum(lp) = n. */
struct GeometrySpec {
    int n = 0;
    std::vector<int> l;  // hypersurface degrees
    std::vector<int> lp; // bundle degrees

    int r() const { return static_cast<int>(l.size()); }
    int m() const { return static_cast<int>(lp.size()); }

    /* Throws InvalidSpec when n < 2, a degree is < 1, or the Calabi-Yau
     * balance fails; the message names sum(l)+sum(lp) and n. */
    void validate() const;

    /* Discriminant constant: prod l_a^{l_a} * prod (-lp_b)^{lp_b}, so the
     * discriminant of the family is 1 - kappa q. */
    Rational kappa() const;
};

} // namespace qgw
