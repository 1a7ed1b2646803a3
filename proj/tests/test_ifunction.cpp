#include "qgw/ifunction.hpp"

#include "qgw/errors.hpp"

#include "doctest.h"

using namespace qgw;

namespace {

const GeometrySpec kExample{4, {2}, {2}};
const GeometrySpec kConifold{2, {}, {1, 1}};

} // namespace

TEST_SUITE_BEGIN("ifunction");

TEST_CASE("degree-zero term is 1")
{
    for (const GeometrySpec& spec :
         {kExample, kConifold, GeometrySpec{5, {5}, {}}, GeometrySpec{3, {}, {3}}}) {
        const IExpansion expansion = expand_i(spec, 3, 4);
        CHECK(expansion.slot(0, 0) == HPoly::constant(spec.n, Rational(1)));
        for (int j = 1; j <= 4; ++j)
            CHECK(expansion.slot(0, j).is_zero());
    }
}

TEST_CASE("example geometry: q^1 w^1 coefficient is 4H")
{
    const IExpansion expansion = expand_i(kExample, 1, 2);
    CHECK(expansion.slot(1, 1) == Rational(4) * HPoly::h_power(4, 1));
    CHECK(expansion.slot(1, 0).is_zero());
}

TEST_CASE("example geometry: I0 = 1 and I1 = 4q + 18q^2 + (400/3)q^3")
{
    const IExpansion expansion = expand_i(kExample, 3, 2);
    const auto [i0, i1] = extract_i0_i1(expansion);
    CHECK(i0 == PowerSeries::constant(Rational(1), 3));
    CHECK(i1.coeff(1) == Rational(4));
    CHECK(i1.coeff(2) == Rational(18));
    CHECK(i1.coeff(3) == rational(400, 3));
}

TEST_CASE("I0 = 1 identically when m >= 1, and I1 = 0 when m >= 2")
{
    for (const GeometrySpec& spec :
         {kExample, kConifold, GeometrySpec{3, {}, {3}}, GeometrySpec{4, {}, {2, 1, 1}}}) {
        const auto [i0, i1] = extract_i0_i1(expand_i(spec, 6, 2));
        CHECK(i0 == PowerSeries::constant(Rational(1), 6));
        if (spec.m() >= 2)
            CHECK(i1.is_zero());
    }
}

TEST_CASE("hypersurface case has a nontrivial I0")
{
    /* For m = 0, I0_d = prod_a (l_a d)! / (d!)^n. */
    const auto [i0, i1] = extract_i0_i1(expand_i(GeometrySpec{5, {5}, {}}, 3, 2));
    CHECK(i0.coeff(1) == Rational(120));
    CHECK(i0.coeff(2) == Rational(113400));
    CHECK(i0.coeff(3) == Rational(168168000));
    CHECK(i1.coeff(1) == Rational(770));
}

TEST_CASE("residue grading holds for expansions")
{
    for (const GeometrySpec& spec : {kExample, kConifold, GeometrySpec{6, {2, 2}, {2}}})
        CHECK(expand_i(spec, 4, spec.n + 1).grading_ok());
}

TEST_CASE("truncation coherence")
{
    const IExpansion big = expand_i(kExample, 6, 6);
    CHECK(big.truncated(3, 2) == expand_i(kExample, 3, 2));
    CHECK(big.truncated(6, 4) == expand_i(kExample, 6, 4));
}

TEST_CASE("Picard-Fuchs annihilation")
{
    CHECK(pf_check(kExample, expand_i(kExample, 5, 6)));
    CHECK(pf_check(kConifold, expand_i(kConifold, 5, 4)));

    /* Sensitivity: a single perturbed coefficient must break the check. */
    IExpansion corrupted = expand_i(kExample, 5, 6);
    corrupted.slot(2, 1) += rational(1, 7) * HPoly::h_power(4, 1);
    CHECK_FALSE(pf_check(kExample, corrupted));

    CHECK_THROWS_AS(pf_check(kExample, expand_i(kExample, 5, 3)), WindowExhausted);
}

TEST_CASE("invalid geometry is rejected")
{
    CHECK_THROWS_AS(expand_i(GeometrySpec{4, {2}, {3}}, 3, 2), InvalidSpec);
    CHECK_THROWS_AS(expand_i(GeometrySpec{1, {1}, {}}, 3, 2), InvalidSpec);
    CHECK_THROWS_AS(expand_i(GeometrySpec{3, {0, 3}, {}}, 3, 2), InvalidSpec);
}

TEST_SUITE_END();
