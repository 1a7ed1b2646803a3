#pragma once

#include "qgw/geometry.hpp"
#include "qgw/iexpansion.hpp"
#include "qgw/power_series.hpp"

#include <utility>

namespace qgw {

/* The specialized I-function expansion in (Q[H]/(H^n-1))[[q]][[w]], w = 1/z,
 * with the torus weights at the n-th roots of unity. The q^d coefficient is
 *
 *   prod_a prod_{k=1..l_a d} (l_a H w + k)
 *   prod_b prod_{k=0..lp_b d - 1} (-lp_b H w - k)
 *   prod_{k=1..d} ((H w + k)^n - w^n)^{-1}
 *
 * computed to w-order worder; the d = 0 term is 1. Result window [0, worder],
 * grade shift 0. */
IExpansion expand_i(const GeometrySpec& spec, int qorder, int worder);

/* The 1/z expansion heads: I0 = H^0 coefficient at w^0, I1 = H^1 coefficient
 * at w^1. I0 = 1 + O(q) and I1 = O(q). */
std::pair<PowerSeries, PowerSeries> extract_i0_i1(const IExpansion& expansion);

/* Checks that the Picard-Fuchs operator
 *
 *   D^n - 1 - q prod_a prod_{k=1..l_a} (l_a D + k z)
 *               prod_b prod_{k=0..lp_b-1} (-lp_b D - k z)
 *
 * with D = H + z q d/dq annihilates the expansion on the shared truncation
 * window. Requires w-headroom wmax >= n; throws WindowExhausted otherwise. */
bool pf_check(const GeometrySpec& spec, const IExpansion& expansion);

} // namespace qgw
