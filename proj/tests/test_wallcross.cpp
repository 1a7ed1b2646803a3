#include "qgw/wallcross.hpp"

#include "qgw/errors.hpp"
#include "qgw/ifunction.hpp"

#include "doctest.h"
#include "naive_series.hpp"

using namespace qgw;

namespace {

const GeometrySpec kExample{4, {2}, {2}};
const GeometrySpec kConifold{2, {}, {1, 1}};

} // namespace

TEST_SUITE_BEGIN("wallcross");

TEST_CASE("chern coefficient")
{
    CHECK(chern_coefficient(kExample) == Rational(2));
    CHECK(chern_coefficient(GeometrySpec{5, {5}, {}}) == Rational(9));
    CHECK(chern_coefficient(kConifold) == Rational(0));
    CHECK(chern_coefficient(GeometrySpec{3, {}, {3}}) == Rational(2)); // binom(3,2) - 3/3
}

TEST_CASE("Euler characteristic of the complete intersection")
{
    /* Independent route: expand (1+H)^n / prod(1+l_a H) with the naive
     * kernel and long division by repeated multiplication. */
    const auto chi_oracle = [](int n, const std::vector<int>& l) {
        const int top = n - 1 - static_cast<int>(l.size());
        PowerSeries numerator(top);
        for (int j = 0; j <= top; ++j)
            numerator.set_coeff(j, binomial(static_cast<unsigned long>(n),
                                            static_cast<unsigned long>(j)));
        /* 1/(1+lH) = sum (-l)^k H^k. */
        PowerSeries result = numerator;
        for (int degree : l) {
            PowerSeries geometric(top);
            for (int k = 0; k <= top; ++k)
                geometric.set_coeff(k, pow_int(Rational(-degree), k));
            result = naive::mul(result, geometric);
        }
        Rational chi = result.coeff(top);
        for (int degree : l)
            chi *= degree;
        return chi;
    };

    CHECK(chi_oracle(5, {5}) == Rational(-200));
    CHECK(euler_characteristic(GeometrySpec{5, {5}, {}}) == Rational(-200));
    CHECK(euler_characteristic(GeometrySpec{3, {3}, {}}) == Rational(0));
    CHECK(euler_characteristic(GeometrySpec{4, {2, 2}, {}}) == Rational(0));
    CHECK(euler_characteristic(GeometrySpec{6, {2, 4}, {}}) == chi_oracle(6, {2, 4}));
    CHECK_FALSE(euler_characteristic(kExample).has_value());
    CHECK_FALSE(euler_characteristic(kConifold).has_value());
}

TEST_CASE("mirror map")
{
    const auto [i0, i1] = extract_i0_i1(expand_i(kExample, 3, 1));
    const PowerSeries q_map = mirror_map(i0, i1);
    CHECK(q_map == PowerSeries(std::vector<Rational>{
                       Rational(0), Rational(1), Rational(4), Rational(26)}));

    const auto [c0, c1] = extract_i0_i1(expand_i(kConifold, 4, 1));
    CHECK(mirror_map(c0, c1) == PowerSeries::variable(4));

    PowerSeries synthetic(3);
    synthetic.set_coeff(1, rational(5, 2));
    const PowerSeries mapped = mirror_map(PowerSeries::constant(Rational(1), 3), synthetic);
    CHECK(mapped.coeff(1) == Rational(1));
    CHECK(mapped.coeff(2) == rational(5, 2));
}

TEST_CASE("worked example report")
{
    const PotentialReport report = compute_report(kExample, 3);
    CHECK(report.F_gw_q == PowerSeries(std::vector<Rational>{
                               Rational(0), rational(-1, 3), rational(-11, 6),
                               rational(-124, 9)}));
    REQUIRE(report.N.size() == 3);
    CHECK(report.N[0] == rational(-1, 3));
    CHECK(report.N[1] == rational(-1, 2));
    CHECK(report.N[2] == rational(-10, 9));
    CHECK(report.N[0] == report.F_gw_q.coeff(1));
    CHECK(nd_crosscheck(report.F_gw_q, report.Q_of_q, report.N));
}

TEST_CASE("conifold invariants in closed form")
{
    const PotentialReport report = compute_report(kConifold, 10);
    CHECK(report.F_gw_q == report.F_qm);
    for (int d = 1; d <= 10; ++d)
        CHECK(report.N[static_cast<std::size_t>(d - 1)] == rational(1, 12 * d));
    CHECK(nd_crosscheck(report.F_gw_q, report.Q_of_q, report.N));
}

TEST_CASE("crosscheck rejects a perturbed invariant")
{
    PotentialReport report = compute_report(kExample, 4);
    REQUIRE(nd_crosscheck(report.F_gw_q, report.Q_of_q, report.N));
    report.N[2] += rational(1, 1000);
    CHECK_FALSE(nd_crosscheck(report.F_gw_q, report.Q_of_q, report.N));
}

TEST_CASE("reversion round trip across the matrix")
{
    for (const GeometrySpec& spec :
         {kExample, kConifold, GeometrySpec{5, {5}, {}}, GeometrySpec{3, {}, {3}},
          GeometrySpec{6, {2, 2}, {2}}}) {
        const PotentialReport report = compute_report(spec, 8);
        CHECK(compose(report.Q_of_q, report.q_of_Q) == PowerSeries::variable(8));
        CHECK(compose(report.q_of_Q, report.Q_of_q) == PowerSeries::variable(8));
        CHECK(report.N[0] == report.F_gw_q.coeff(1));
        CHECK(nd_crosscheck(report.F_gw_q, report.Q_of_q, report.N));
    }
}

TEST_CASE("m >= 2 wall crossing is the identity")
{
    for (const GeometrySpec& spec : {kConifold, GeometrySpec{4, {}, {2, 1, 1}}}) {
        const PotentialReport report = compute_report(spec, 6);
        CHECK(report.F_gw_q == report.F_qm);
        CHECK(report.Q_of_q == PowerSeries::variable(6));
        CHECK(report.chern_coeff == Rational(0));
        CHECK_FALSE(report.chi_top.has_value());
    }
}

TEST_SUITE_END();
