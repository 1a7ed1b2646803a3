#include "qgw/invariants.hpp"

#include "qgw/errors.hpp"
#include "qgw/ifunction.hpp"

#include "doctest.h"
#include "naive_series.hpp"

using namespace qgw;

namespace {

const GeometrySpec kExample{4, {2}, {2}};
const GeometrySpec kConifold{2, {}, {1, 1}};

PowerSeries one_minus(const Rational& kappa, int order)
{
    PowerSeries s = PowerSeries::constant(Rational(1), order);
    s.set_coeff(1, -kappa);
    return s;
}

/* (1 - kappa q)^alpha by the binomial series, independent of pow_unit. */
PowerSeries binomial_power(const Rational& kappa, const Rational& alpha, int order)
{
    PowerSeries out(order);
    Rational coefficient(1);
    for (int k = 0; k <= order; ++k) {
        out.set_coeff(k, coefficient * pow_int(-kappa, k));
        coefficient *= (alpha - k) / (k + 1);
    }
    return out;
}

} // namespace

TEST_SUITE_BEGIN("invariants");

TEST_CASE("example geometry initial constants")
{
    const InitialConstants constants = compute_ck(kExample, 3);
    REQUIRE(constants.C.size() == 4);
    CHECK(constants.C[0] == PowerSeries::constant(Rational(1), 3));
    CHECK(constants.C[1] == PowerSeries(std::vector<Rational>{
                                Rational(1), Rational(4), Rational(36), Rational(400)}));
}

TEST_CASE("conifold initial constants are trivial")
{
    const InitialConstants constants = compute_ck(kConifold, 6);
    CHECK(constants.C[0] == PowerSeries::constant(Rational(1), 6));
    CHECK(constants.C[1] == PowerSeries::constant(Rational(1), 6));
}

TEST_CASE("C_k(0) = 1 across the matrix")
{
    for (const GeometrySpec& spec :
         {kExample, kConifold, GeometrySpec{5, {5}, {}}, GeometrySpec{3, {}, {3}},
          GeometrySpec{6, {2, 2}, {2}}})
        for (const PowerSeries& ck : compute_ck(spec, 4).C)
            CHECK(ck.constant_term() == 1);
}

TEST_CASE("example quasimap potential and its closed structure")
{
    const InitialConstants constants = compute_ck(kExample, 8);
    const PowerSeries potential = quasimap_potential(kExample, constants, 8);
    CHECK(potential.constant_term() == 0);
    CHECK(potential.coeff(1) == rational(-2, 3));
    CHECK(potential.coeff(2) == rational(-10, 3));
    CHECK(potential.coeff(3) == rational(-224, 9));

    const PowerSeries structural = rational(-1, 12) * log_unit(one_minus(Rational(16), 8)) -
                                   rational(1, 2) * log_unit(constants.C[1]);
    CHECK(potential == structural);
}

TEST_CASE("conifold potential is -(1/12) log(1-q)")
{
    const InitialConstants constants = compute_ck(kConifold, 8);
    CHECK(quasimap_potential(kConifold, constants, 8) ==
          rational(-1, 12) * log_unit(one_minus(Rational(1), 8)));
}

TEST_CASE("q^1 coefficient of the potential in closed form")
{
    for (const GeometrySpec& spec : {kExample, kConifold, GeometrySpec{6, {2, 2}, {2}}}) {
        const int n = spec.n, r = spec.r(), m = spec.m();
        const InitialConstants constants = compute_ck(spec, 2);
        const PowerSeries potential = quasimap_potential(spec, constants, 2);
        Rational expected = spec.kappa() *
                            rational(3 * (n - 1 - r - m) * (n - 1 - r - m) + n - r + m - 3, 48);
        for (int k = m; k <= n - r - 2; ++k)
            expected -= rational(1, 2) *
                        binomial(static_cast<unsigned long>(n - r - k), 2) *
                        constants.C[static_cast<std::size_t>(k)].coeff(1);
        CHECK(potential.coeff(1) == expected);
    }
}

TEST_CASE("diagnostics closed forms for the example geometry")
{
    const InitialConstants constants = compute_ck(kExample, 6);
    const DiagnosticSeries diag = diagnostics(kExample, constants, 6);

    CHECK(diag.L == binomial_power(Rational(16), rational(-1, 4), 6));
    CHECK(diag.R0 == binomial_power(Rational(16), rational(-1, 8), 6));
    CHECK(diag.mu.constant_term() == 0);
    CHECK(diag.loop.constant_term() == 0);
    CHECK(diag.L.coeff(1) == Rational(4));
    CHECK(diag.R0.coeff(1) == Rational(2));
}

TEST_CASE("algebraic relations among L and R0")
{
    for (const GeometrySpec& spec :
         {kExample, kConifold, GeometrySpec{5, {5}, {}}, GeometrySpec{6, {2, 2}, {2}}}) {
        const InitialConstants constants = compute_ck(spec, 6);
        const DiagnosticSeries diag = diagnostics(spec, constants, 6);
        CHECK(pow_unit(diag.L, Rational(spec.n)) * one_minus(spec.kappa(), 6) ==
              PowerSeries::constant(Rational(1), 6));
        CHECK(diag.R0 * diag.R0 == pow_unit(diag.L, Rational(spec.r() - spec.m() + 1)));
    }
}

TEST_CASE("vertex/loop decomposition recovers the potential")
{
    for (const GeometrySpec& spec :
         {kExample, GeometrySpec{5, {5}, {}}, GeometrySpec{3, {}, {3}}}) {
        const InitialConstants constants = compute_ck(spec, 8);
        const PowerSeries potential = quasimap_potential(spec, constants, 8);
        CHECK(vert_loop_consistency(spec, constants, diagnostics(spec, constants, 8), potential));
    }
}

TEST_CASE("vertex/loop decomposition is sensitive to a corrupted C_2")
{
    const GeometrySpec spec{6, {2, 2}, {2}};
    InitialConstants constants = compute_ck(spec, 8);
    const PowerSeries potential = quasimap_potential(spec, constants, 8);
    CHECK(vert_loop_consistency(spec, constants, diagnostics(spec, constants, 8), potential));

    /* Perturbing C_2 underneath a fixed potential must break the identity. */
    constants.C[2].set_coeff(3, constants.C[2].coeff(3) + rational(1, 5));
    CHECK_FALSE(vert_loop_consistency(spec, constants, diagnostics(spec, constants, 8),
                                      potential));
}

TEST_CASE("example geometry anchors C1 = 1 + q d/dq (I1/I0)")
{
    const InitialConstants constants = compute_ck(kExample, 8);
    const auto [i0, i1] = extract_i0_i1(expand_i(kExample, 8, 1));
    CHECK(constants.C[1] ==
          PowerSeries::constant(Rational(1), 8) + qddq(i1 * inverse(i0)));
}

TEST_SUITE_END();
