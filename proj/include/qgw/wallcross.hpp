#pragma once

#include "qgw/geometry.hpp"
#include "qgw/invariants.hpp"
#include "qgw/power_series.hpp"

#include <optional>
#include <vector>

namespace qgw {

/* Full output bundle for one geometry at one truncation order. F_gw_q is
 * the Gromov-Witten potential still expressed in the quasimap variable q,
 * i.e. the composition F(Q(q)); the degree-d invariants N_d are read off
 * after changing back to the mirror coordinate Q. */
struct PotentialReport {
    GeometrySpec spec;
    int order = 0;
    InitialConstants constants;
    PowerSeries I0;
    PowerSeries I1;
    PowerSeries F_qm;
    PowerSeries F_gw_q;
    PowerSeries Q_of_q;
    PowerSeries q_of_Q;
    std::vector<Rational> N; // N_1..N_order
    std::optional<Rational> chi_top;
    Rational chern_coeff;
    DiagnosticSeries diag;

    explicit PotentialReport(int order)
        : order(order), I0(order), I1(order), F_qm(order), F_gw_q(order),
          Q_of_q(order), q_of_Q(order), chern_coeff(0), diag(order) {}
};

/* binom(n,2) - sum_a n/l_a - [m=1] n/lp_1 for m <= 1; zero for m >= 2
 * (no correction term enters then). */
Rational chern_coefficient(const GeometrySpec& spec);

/* Euler characteristic of the complete intersection, for the m = 0 wall
 * crossing only: (prod l_a) [H^{n-1-r}] (1+H)^n / prod (1 + l_a H).
 * Absent for m >= 1 (the log I0 term vanishes there). */
std::optional<Rational> euler_characteristic(const GeometrySpec& spec);

/* Mirror coordinate Q(q) = q exp(I1/I0). */
PowerSeries mirror_map(const PowerSeries& I0, const PowerSeries& I1);

/* Wall crossing from the quasimap potential to the Gromov-Witten side:
 *   m >= 2:  F_gw_q = F_qm
 *   m  = 1:  F_gw_q = (A/24) I1 + F_qm
 *   m  = 0:  F_gw_q = (chi/24) log I0 + (A/24) I1/I0 + F_qm
 * then inverts the mirror map and reads N_d from F_gw_q(q(Q)). */
PotentialReport gw_potential(const GeometrySpec& spec, const InitialConstants& constants,
                             const PowerSeries& I0, const PowerSeries& I1,
                             const PowerSeries& F_qm, int qorder);

/* Forward recomposition check, independent of the reversion route:
 * true iff sum_d N_d Q(q)^d = F_gw_q exactly to truncation. */
bool nd_crosscheck(const PowerSeries& F_gw_q, const PowerSeries& Q_of_q,
                   const std::vector<Rational>& N);

/* Whole pipeline: I-function, initial constants, potentials, mirror map,
 * diagnostics, invariants. */
PotentialReport compute_report(const GeometrySpec& spec, int qorder);

} // namespace qgw
