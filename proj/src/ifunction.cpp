#include "qgw/ifunction.hpp"

#include "qgw/errors.hpp"

#include <stdexcept>
#include <vector>

namespace qgw {

namespace {

/* Per-degree scratch: an element of (Q[H]/(H^n-1))[[w]] truncated at
 * w-order W, as a dense vector of HPoly coefficients. */
using WSeries = std::vector<HPoly>;

WSeries wseries_one(int n, int worder)
{
    WSeries f(static_cast<std::size_t>(worder) + 1, HPoly(n));
    f[0] = HPoly::constant(n, Rational(1));
    return f;
}

/* f * (alpha H w + beta), in place. */
void mul_linear(WSeries& f, const Rational& alpha, const Rational& beta)
{
    const int worder = static_cast<int>(f.size()) - 1;
    for (int j = worder; j >= 0; --j) {
        HPoly term = f[static_cast<std::size_t>(j)];
        term *= beta;
        if (j > 0) {
            HPoly up = f[static_cast<std::size_t>(j - 1)].mul_h();
            up *= alpha;
            term += up;
        }
        f[static_cast<std::size_t>(j)] = std::move(term);
    }
}

WSeries wmul(const WSeries& f, const WSeries& g)
{
    const int worder = static_cast<int>(f.size()) - 1;
    const int n = f[0].n();
    WSeries out(f.size(), HPoly(n));
    for (int i = 0; i <= worder; ++i) {
        if (f[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; i + j <= worder; ++j) {
            if (g[static_cast<std::size_t>(j)].is_zero())
                continue;
            out[static_cast<std::size_t>(i + j)] +=
                f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

/* Inverse of (H w + k)^n - w^n as a power series in w. The constant term is
 * the scalar k^n; the w^n coefficient H^n - 1 folds to zero in the ring, so
 * the factor is the polynomial sum_{j<n} binom(n,j) k^{n-j} H^j w^j. */
WSeries inverse_denominator_factor(int n, int k, int worder)
{
    WSeries factor(static_cast<std::size_t>(worder) + 1, HPoly(n));
    for (int j = 0; j <= worder && j < n; ++j) {
        HPoly term = HPoly::h_power(n, j);
        term *= binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j)) *
                pow_int(Rational(k), n - j);
        factor[static_cast<std::size_t>(j)] = std::move(term);
    }
    const Rational lead = 1 / pow_int(Rational(k), n);
    WSeries out(static_cast<std::size_t>(worder) + 1, HPoly(n));
    out[0] = HPoly::constant(n, lead);
    for (int j = 1; j <= worder; ++j) {
        HPoly acc(n);
        for (int i = 1; i <= j && i < n; ++i)
            acc += factor[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(j - i)];
        acc *= -lead;
        out[static_cast<std::size_t>(j)] = std::move(acc);
    }
    return out;
}

} // namespace

IExpansion expand_i(const GeometrySpec& spec, int qorder, int worder)
{
    spec.validate();
    if (qorder < 0 || worder < 0)
        throw std::invalid_argument("expand_i: negative truncation order");

    const int n = spec.n;
    IExpansion out(n, qorder, 0, worder, 0);

    /* Running products across q-degrees: numerator factors only accrue, and
     * the denominator inverse is one new factor per degree. */
    WSeries numerator = wseries_one(n, worder);
    WSeries denominator_inverse = wseries_one(n, worder);

    for (int d = 0; d <= qorder; ++d) {
        if (d >= 1) {
            for (int degree : spec.l)
                for (int k = degree * (d - 1) + 1; k <= degree * d; ++k)
                    mul_linear(numerator, Rational(degree), Rational(k));
            for (int degree : spec.lp)
                for (int k = degree * (d - 1); k <= degree * d - 1; ++k)
                    mul_linear(numerator, Rational(-degree), Rational(-k));
            denominator_inverse = wmul(denominator_inverse,
                                       inverse_denominator_factor(n, d, worder));
        }
        WSeries term = wmul(numerator, denominator_inverse);
        for (int j = 0; j <= worder; ++j)
            out.slot(d, j) = std::move(term[static_cast<std::size_t>(j)]);
    }
    return out;
}

std::pair<PowerSeries, PowerSeries> extract_i0_i1(const IExpansion& expansion)
{
    if (expansion.grade() != 0)
        throw std::invalid_argument("extract_i0_i1: expansion must have grade shift 0");
    return {coefficient_series(expansion, 0, 0), coefficient_series(expansion, 1, 1)};
}

bool pf_check(const GeometrySpec& spec, const IExpansion& expansion)
{
    spec.validate();
    if (expansion.wmax() < spec.n)
        throw WindowExhausted("pf_check: needs w-headroom of at least n orders");

    const int n = spec.n;

    IExpansion derivative_term = expansion;
    for (int i = 0; i < n; ++i)
        derivative_term = apply_h_plus_zqddq(derivative_term);

    IExpansion operator_term = expansion;
    for (int degree : spec.l)
        for (int k = 1; k <= degree; ++k)
            operator_term = Rational(degree) * apply_h_plus_zqddq(operator_term) +
                            Rational(k) * mul_z(operator_term);
    for (int degree : spec.lp)
        for (int k = 0; k <= degree - 1; ++k)
            operator_term = Rational(-degree) * apply_h_plus_zqddq(operator_term) +
                            Rational(-k) * mul_z(operator_term);
    operator_term = mul_q(operator_term);

    const IExpansion residual = derivative_term - expansion - operator_term;
    for (int d = 0; d <= residual.qorder(); ++d)
        for (int j = residual.wmin(); j <= residual.wmax(); ++j)
            if (!residual.slot(d, j).is_zero())
                return false;
    return true;
}

} // namespace qgw
