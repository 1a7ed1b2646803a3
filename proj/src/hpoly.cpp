#include "qgw/hpoly.hpp"

#include "qgw/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgw {

namespace {

void require_same_ring(const HPoly& a, const HPoly& b, const char* op)
{
    if (a.n() != b.n())
        throw DimensionMismatch(std::string(op) + ": ring dimensions differ");
}

} // namespace

HPoly::HPoly(int n)
{
    if (n < 1)
        throw std::invalid_argument("HPoly: ring dimension must be positive");
    coeffs_.assign(static_cast<std::size_t>(n), Rational(0));
}

HPoly HPoly::constant(int n, const Rational& value)
{
    HPoly p(n);
    p.coeffs_[0] = value;
    return p;
}

HPoly HPoly::h_power(int n, int a)
{
    HPoly p(n);
    int idx = a % n;
    if (idx < 0)
        idx += n;
    p.coeffs_[static_cast<std::size_t>(idx)] = 1;
    return p;
}

void HPoly::set_coeff(int a, Rational value)
{
    coeffs_.at(static_cast<std::size_t>(a)) = std::move(value);
}

bool HPoly::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return sgn(c) == 0; });
}

HPoly& HPoly::operator+=(const HPoly& other)
{
    require_same_ring(*this, other, "HPoly::operator+=");
    for (int a = 0; a < n(); ++a)
        coeffs_[static_cast<std::size_t>(a)] += other.coeff(a);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& other)
{
    require_same_ring(*this, other, "HPoly::operator-=");
    for (int a = 0; a < n(); ++a)
        coeffs_[static_cast<std::size_t>(a)] -= other.coeff(a);
    return *this;
}

HPoly& HPoly::operator*=(const Rational& scalar)
{
    for (Rational& c : coeffs_)
        c *= scalar;
    return *this;
}

HPoly HPoly::mul_h() const
{
    HPoly out(n());
    for (int a = 0; a < n(); ++a)
        out.coeffs_[static_cast<std::size_t>((a + 1) % n())] = coeffs_[static_cast<std::size_t>(a)];
    return out;
}

HPoly operator+(const HPoly& a, const HPoly& b)
{
    HPoly out = a;
    out += b;
    return out;
}

HPoly operator-(const HPoly& a, const HPoly& b)
{
    HPoly out = a;
    out -= b;
    return out;
}

HPoly operator*(const HPoly& a, const HPoly& b)
{
    require_same_ring(a, b, "HPoly::operator*");
    const int n = a.n();
    HPoly out(n);
    for (int i = 0; i < n; ++i) {
        if (sgn(a.coeff(i)) == 0)
            continue;
        for (int j = 0; j < n; ++j) {
            if (sgn(b.coeff(j)) == 0)
                continue;
            const int k = (i + j) % n;
            out.set_coeff(k, out.coeff(k) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

HPoly operator*(const Rational& scalar, const HPoly& a)
{
    HPoly out = a;
    out *= scalar;
    return out;
}

} // namespace qgw
