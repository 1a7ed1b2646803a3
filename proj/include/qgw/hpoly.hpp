#pragma once

#include "qgw/rational.hpp"

#include <vector>

namespace qgw {

/* Element of Q[H]/(H^n - 1), stored densely as the coefficients of
 * H^0..H^{n-1}. Multiplication is cyclic convolution (indices mod n). */
class HPoly {
public:
    explicit HPoly(int n);

    static HPoly constant(int n, const Rational& value);

    /* The basis monomial H^{a mod n}. */
    static HPoly h_power(int n, int a);

    int n() const { return static_cast<int>(coeffs_.size()); }
    const Rational& coeff(int a) const { return coeffs_.at(static_cast<std::size_t>(a)); }
    void set_coeff(int a, Rational value);

    bool is_zero() const;

    HPoly& operator+=(const HPoly& other);
    HPoly& operator-=(const HPoly& other);
    HPoly& operator*=(const Rational& scalar);

    /* Multiplication by H: a cyclic index shift. */
    HPoly mul_h() const;

    bool operator==(const HPoly& other) const = default;

private:
    std::vector<Rational> coeffs_;
};

HPoly operator+(const HPoly& a, const HPoly& b);
HPoly operator-(const HPoly& a, const HPoly& b);
HPoly operator*(const HPoly& a, const HPoly& b);
HPoly operator*(const Rational& scalar, const HPoly& a);

} // namespace qgw
