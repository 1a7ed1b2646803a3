#pragma once

#include "qgw/geometry.hpp"
#include "qgw/power_series.hpp"

#include <vector>

namespace qgw {

/* The unit series C_0..C_{n-1} produced by the recursion
 * B_k = (H + z q d/dq) B_{k-1}/C_{k-1}, C_k = [H^k] B_k(q, infinity),
 * seeded with the I-function expansion. Every C_k is 1 + O(q). */
struct InitialConstants {
    int n = 0;
    int r = 0;
    int m = 0;
    std::vector<PowerSeries> C;
};

/* Closed forms attached to the discriminant 1 - kappa q, plus the primitive
 * of the vertex-contribution derivative; see diagnostics(). */
struct DiagnosticSeries {
    PowerSeries L;
    PowerSeries mu;
    PowerSeries R0;
    PowerSeries loop;
    PowerSeries vert_primitive;

    DiagnosticSeries(int order)
        : L(order), mu(order), R0(order), loop(order), vert_primitive(order) {}
};

InitialConstants compute_ck(const GeometrySpec& spec, int qorder);

/* The genus-1 quasimap potential in closed form:
 *
 *   F = -((3(n-1-r-m)^2 + n-r+m-3)/48) log(1 - kappa q)
 *       - (1/2) sum_{k=m..n-r-2} binom(n-r-k, 2) log C_k
 *
 * with an empty sum when m > n-r-2; F(0) = 0. */
PowerSeries quasimap_potential(const GeometrySpec& spec, const InitialConstants& constants,
                               int qorder);

/* L = (1 - kappa q)^{-1/n};  mu = int_0^q (L-1)/x dx;  R0 = L^{(r-m+1)/2};
 * loop = (n/24)(n-1 - 2 sum 1/l_a - 2 sum 1/lp_b) mu
 *        - ((3(n-1-r-m)^2 + n-2)/24) log(1 - kappa q)
 *        - sum_{k=m..n-r-2} binom(n-r-k, 2) log C_k;
 * vert_primitive = -(n/24) log R0
 *                  + (1/24)(sum n/l_a + sum n/lp_b - binom(n,2)) mu. */
DiagnosticSeries diagnostics(const GeometrySpec& spec, const InitialConstants& constants,
                             int qorder);

/* The decomposition of the potential into vertex and loop contributions:
 * true iff F = vert_primitive + loop/2 exactly to truncation. */
bool vert_loop_consistency(const GeometrySpec& spec, const InitialConstants& constants,
                           const DiagnosticSeries& diag, const PowerSeries& potential);

} // namespace qgw
