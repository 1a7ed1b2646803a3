#include "qgw/power_series.hpp"

#include "qgw/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace qgw {

PowerSeries::PowerSeries(int order)
{
    if (order < 0)
        throw std::invalid_argument("PowerSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("PowerSeries: empty coefficient list");
}

PowerSeries PowerSeries::constant(const Rational& value, int order)
{
    PowerSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

PowerSeries PowerSeries::variable(int order)
{
    if (order < 1)
        throw std::invalid_argument("PowerSeries::variable: order must be >= 1");
    PowerSeries s(order);
    s.coeffs_[1] = 1;
    return s;
}

void PowerSeries::set_coeff(int d, Rational value)
{
    coeffs_.at(static_cast<std::size_t>(d)) = std::move(value);
}

bool PowerSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return sgn(c) == 0; });
}

PowerSeries PowerSeries::truncated(int new_order) const
{
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("PowerSeries::truncated: order out of range");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(),
                                             coeffs_.begin() + new_order + 1));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other)
{
    return *this = *this + other;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other)
{
    return *this = *this - other;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar)
{
    for (Rational& c : coeffs_)
        c *= scalar;
    return *this;
}

PowerSeries PowerSeries::operator-() const
{
    PowerSeries out = *this;
    for (Rational& c : out.coeffs_)
        c = -c;
    return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    const int d = std::min(a.order(), b.order());
    PowerSeries out(d);
    for (int i = 0; i <= d; ++i)
        out.set_coeff(i, a.coeff(i) + b.coeff(i));
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
{
    const int d = std::min(a.order(), b.order());
    PowerSeries out(d);
    for (int i = 0; i <= d; ++i)
        out.set_coeff(i, a.coeff(i) - b.coeff(i));
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    const int d = std::min(a.order(), b.order());
    PowerSeries out(d);
    for (int i = 0; i <= d; ++i) {
        if (sgn(a.coeff(i)) == 0)
            continue;
        for (int j = 0; i + j <= d; ++j) {
            if (sgn(b.coeff(j)) == 0)
                continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

PowerSeries operator*(const Rational& scalar, const PowerSeries& a)
{
    PowerSeries out = a;
    out *= scalar;
    return out;
}

PowerSeries inverse(const PowerSeries& a)
{
    if (sgn(a.constant_term()) == 0)
        throw ZeroConstantTerm("inverse: constant term is zero");
    const int d = a.order();
    PowerSeries out(d);
    const Rational lead = 1 / a.constant_term();
    out.set_coeff(0, lead);
    for (int k = 1; k <= d; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += a.coeff(i) * out.coeff(k - i);
        out.set_coeff(k, -lead * acc);
    }
    return out;
}

PowerSeries log_unit(const PowerSeries& a)
{
    if (a.constant_term() != 1)
        throw NotUnitOne("log_unit: constant term is not 1");
    /* q (log f)' = q f'/f, then divide out one power of q and integrate. */
    return integrate_over_x(qddq(a) * inverse(a));
}

PowerSeries exp_nilconst(const PowerSeries& a)
{
    if (sgn(a.constant_term()) != 0)
        throw NonzeroConstant("exp_nilconst: constant term is not 0");
    const int d = a.order();
    PowerSeries out(d);
    out.set_coeff(0, Rational(1));
    /* d*g_d = sum_{i=1..d} i a_i g_{d-i}, from q g' = g q a'. */
    for (int k = 1; k <= d; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += Rational(i) * a.coeff(i) * out.coeff(k - i);
        out.set_coeff(k, acc / k);
    }
    return out;
}

PowerSeries qddq(const PowerSeries& a)
{
    PowerSeries out = a;
    for (int i = 0; i <= a.order(); ++i)
        out.set_coeff(i, Rational(i) * a.coeff(i));
    return out;
}

PowerSeries integrate_over_x(const PowerSeries& a)
{
    if (sgn(a.constant_term()) != 0)
        throw NonzeroConstant("integrate_over_x: constant term is not 0");
    PowerSeries out(a.order());
    for (int i = 1; i <= a.order(); ++i)
        out.set_coeff(i, a.coeff(i) / i);
    return out;
}

PowerSeries substitute_qexp(const PowerSeries& a, const PowerSeries& g)
{
    if (sgn(g.constant_term()) != 0)
        throw NonzeroConstant("substitute_qexp: substitution series has nonzero constant term");
    const int d = std::min(a.order(), g.order());
    const PowerSeries factor = exp_nilconst(g.truncated(d));
    PowerSeries out(d);
    PowerSeries power = PowerSeries::constant(Rational(1), d); // e^{k g}
    for (int k = 0; k <= d; ++k) {
        if (sgn(a.coeff(k)) != 0)
            for (int j = 0; k + j <= d; ++j)
                out.set_coeff(k + j, out.coeff(k + j) + a.coeff(k) * power.coeff(j));
        if (k < d)
            power = power * factor;
    }
    return out;
}

PowerSeries compose(const PowerSeries& a, const PowerSeries& inner)
{
    if (sgn(inner.constant_term()) != 0)
        throw NonzeroConstant("compose: inner series has nonzero constant term");
    const int d = std::min(a.order(), inner.order());
    const PowerSeries g = inner.truncated(d);
    PowerSeries out = PowerSeries::constant(a.coeff(d), d);
    for (int k = d - 1; k >= 0; --k) {
        out = out * g;
        out.set_coeff(0, out.coeff(0) + a.coeff(k));
    }
    return out;
}

PowerSeries reversion(const PowerSeries& a)
{
    if (a.order() < 1 || sgn(a.constant_term()) != 0 || sgn(a.coeff(1)) == 0)
        throw NotReversible("reversion: series must be a_1 q + O(q^2) with a_1 != 0");
    const int d = a.order();
    /* Lagrange inversion: b_k = (1/k) [q^{k-1}] (q/a)^k. */
    PowerSeries shifted(d - 1 >= 0 ? d - 1 : 0);
    for (int i = 0; i <= d - 1; ++i)
        shifted.set_coeff(i, a.coeff(i + 1));
    const PowerSeries u = inverse(shifted);
    PowerSeries out(d);
    PowerSeries upow = PowerSeries::constant(Rational(1), d - 1);
    for (int k = 1; k <= d; ++k) {
        upow = upow * u;
        out.set_coeff(k, upow.coeff(k - 1) / k);
    }
    return out;
}

PowerSeries pow_unit(const PowerSeries& f, const Rational& alpha)
{
    return exp_nilconst(alpha * log_unit(f));
}

} // namespace qgw
