#include "qgw/invariants.hpp"

#include "qgw/ifunction.hpp"

namespace qgw {

namespace {

PowerSeries one_minus_kappa_q(const GeometrySpec& spec, int qorder)
{
    PowerSeries s = PowerSeries::constant(Rational(1), qorder);
    s.set_coeff(1, -spec.kappa());
    return s;
}

/* Coefficient of log C_k in Theorem-form sums: binom(n-r-k, 2) for
 * k = m..n-r-2. */
Rational ck_weight(const GeometrySpec& spec, int k)
{
    return binomial(static_cast<unsigned long>(spec.n - spec.r() - k), 2);
}

} // namespace

InitialConstants compute_ck(const GeometrySpec& spec, int qorder)
{
    spec.validate();
    InitialConstants out;
    out.n = spec.n;
    out.r = spec.r();
    out.m = spec.m();
    out.C.reserve(static_cast<std::size_t>(spec.n));

    /* n-1 recursion steps each consume one w-order, so B_0 needs n-1 of
     * headroom above the w^0 slot. */
    IExpansion b = expand_i(spec, qorder, spec.n - 1);
    out.C.push_back(extract_hk_at_w0(b, 0));
    for (int k = 1; k < spec.n; ++k) {
        b = apply_h_plus_zqddq(mul_scalar_series(b, inverse(out.C.back())));
        out.C.push_back(extract_hk_at_w0(b, k));
    }
    return out;
}

PowerSeries quasimap_potential(const GeometrySpec& spec, const InitialConstants& constants,
                               int qorder)
{
    const int n = spec.n;
    const int r = spec.r();
    const int m = spec.m();
    const Rational discriminant_weight =
        rational(3 * (n - 1 - r - m) * (n - 1 - r - m) + n - r + m - 3, 48);

    PowerSeries potential = -discriminant_weight * log_unit(one_minus_kappa_q(spec, qorder));
    for (int k = m; k <= n - r - 2; ++k)
        potential -= rational(1, 2) * ck_weight(spec, k) *
                     log_unit(constants.C[static_cast<std::size_t>(k)].truncated(qorder));
    return potential;
}

DiagnosticSeries diagnostics(const GeometrySpec& spec, const InitialConstants& constants,
                             int qorder)
{
    const int n = spec.n;
    const int r = spec.r();
    const int m = spec.m();
    const PowerSeries log_disc = log_unit(one_minus_kappa_q(spec, qorder));

    Rational inverse_degree_sum(0); // sum 1/l_a + sum 1/lp_b
    for (int degree : spec.l)
        inverse_degree_sum += rational(1, degree);
    for (int degree : spec.lp)
        inverse_degree_sum += rational(1, degree);

    DiagnosticSeries diag(qorder);
    diag.L = exp_nilconst(rational(-1, n) * log_disc);
    diag.mu = integrate_over_x(diag.L - PowerSeries::constant(Rational(1), qorder));
    diag.R0 = pow_unit(diag.L, rational(r - m + 1, 2));

    diag.loop = (rational(n, 24) * (Rational(n - 1) - 2 * inverse_degree_sum)) * diag.mu -
                rational(3 * (n - 1 - r - m) * (n - 1 - r - m) + n - 2, 24) * log_disc;
    for (int k = m; k <= n - r - 2; ++k)
        diag.loop -= ck_weight(spec, k) *
                     log_unit(constants.C[static_cast<std::size_t>(k)].truncated(qorder));

    diag.vert_primitive =
        rational(-n, 24) * log_unit(diag.R0) +
        (rational(1, 24) * (Rational(n) * inverse_degree_sum - binomial(static_cast<unsigned long>(n), 2))) *
            diag.mu;
    return diag;
}

bool vert_loop_consistency(const GeometrySpec&, const InitialConstants&,
                           const DiagnosticSeries& diag, const PowerSeries& potential)
{
    return potential == diag.vert_primitive + rational(1, 2) * diag.loop;
}

} // namespace qgw
