#include "qgw/wallcross.hpp"

#include "qgw/ifunction.hpp"

#include <algorithm>

namespace qgw {

Rational chern_coefficient(const GeometrySpec& spec)
{
    if (spec.m() >= 2)
        return Rational(0);
    Rational value = binomial(static_cast<unsigned long>(spec.n), 2);
    for (int degree : spec.l)
        value -= rational(spec.n, degree);
    if (spec.m() == 1)
        value -= rational(spec.n, spec.lp.front());
    return value;
}

std::optional<Rational> euler_characteristic(const GeometrySpec& spec)
{
    if (spec.m() >= 1)
        return std::nullopt;
    const int n = spec.n;
    const int top = n - 1 - spec.r();
    /* Chern series of the complete intersection: (1+H)^n / prod (1+l_a H),
     * as a plain power series in H. */
    PowerSeries numerator(top);
    for (int j = 0; j <= top; ++j)
        numerator.set_coeff(j, binomial(static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(j)));
    PowerSeries denominator = PowerSeries::constant(Rational(1), top);
    for (int degree : spec.l) {
        PowerSeries factor = PowerSeries::constant(Rational(1), top);
        if (top >= 1)
            factor.set_coeff(1, Rational(degree));
        denominator = denominator * factor;
    }
    Rational chi = (numerator * inverse(denominator)).coeff(top);
    for (int degree : spec.l)
        chi *= degree;
    return chi;
}

PowerSeries mirror_map(const PowerSeries& I0, const PowerSeries& I1)
{
    return substitute_qexp(PowerSeries::variable(std::min(I0.order(), I1.order())),
                           I1 * inverse(I0));
}

PotentialReport gw_potential(const GeometrySpec& spec, const InitialConstants& constants,
                             const PowerSeries& I0, const PowerSeries& I1,
                             const PowerSeries& F_qm, int qorder)
{
    PotentialReport report(qorder);
    report.spec = spec;
    report.constants = constants;
    report.I0 = I0;
    report.I1 = I1;
    report.F_qm = F_qm;
    report.chern_coeff = chern_coefficient(spec);
    report.chi_top = euler_characteristic(spec);

    const int m = spec.m();
    if (m >= 2) {
        report.F_gw_q = F_qm;
    } else if (m == 1) {
        report.F_gw_q = (rational(1, 24) * report.chern_coeff) * I1 + F_qm;
    } else {
        report.F_gw_q = (rational(1, 24) * *report.chi_top) * log_unit(I0) +
                        (rational(1, 24) * report.chern_coeff) * (I1 * inverse(I0)) + F_qm;
    }

    report.Q_of_q = mirror_map(I0, I1);
    report.q_of_Q = reversion(report.Q_of_q);
    const PowerSeries gw_in_Q = compose(report.F_gw_q, report.q_of_Q);
    report.N.reserve(static_cast<std::size_t>(qorder));
    for (int d = 1; d <= qorder; ++d)
        report.N.push_back(gw_in_Q.coeff(d));
    return report;
}

bool nd_crosscheck(const PowerSeries& F_gw_q, const PowerSeries& Q_of_q,
                   const std::vector<Rational>& N)
{
    const int order = std::min(F_gw_q.order(),
                               std::min(Q_of_q.order(), static_cast<int>(N.size())));
    PowerSeries in_Q(order);
    for (int d = 1; d <= order; ++d)
        in_Q.set_coeff(d, N[static_cast<std::size_t>(d - 1)]);
    return compose(in_Q, Q_of_q.truncated(order)) == F_gw_q.truncated(order);
}

PotentialReport compute_report(const GeometrySpec& spec, int qorder)
{
    spec.validate();
    const IExpansion expansion = expand_i(spec, qorder, 1);
    const auto [I0, I1] = extract_i0_i1(expansion);
    const InitialConstants constants = compute_ck(spec, qorder);
    const PowerSeries F_qm = quasimap_potential(spec, constants, qorder);
    PotentialReport report = gw_potential(spec, constants, I0, I1, F_qm, qorder);
    report.diag = diagnostics(spec, constants, qorder);
    return report;
}

} // namespace qgw
