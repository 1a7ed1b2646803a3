#pragma once

#include "qgw/hpoly.hpp"
#include "qgw/power_series.hpp"

#include <vector>

namespace qgw {

/* Truncated element of (Q[H]/(H^n-1))[[q]] tensored with a Laurent window
 * in w = 1/z: a table of HPoly coefficients c[d][j] for 0 <= d <= qorder
 * and wmin <= j <= wmax.
 *
 * The window is a truncation at the top and exact at the bottom:
 * coefficients above wmax are unknown, coefficients below wmin are exactly
 * zero. Operators that consume a power of z therefore slide the whole
 * window down by one.
 *
 * Every expansion carries a grade shift k0. The residue grading invariant
 * says the H^a component of c[d][j] vanishes unless a = j + k0 (mod n);
 * multiplication by H or by z each raise k0 by one (mod n). */
class IExpansion {
public:
    IExpansion(int n, int qorder, int wmin, int wmax, int grade);

    int n() const { return n_; }
    int qorder() const { return qorder_; }
    int wmin() const { return wmin_; }
    int wmax() const { return wmax_; }
    int grade() const { return grade_; }

    /* Direct table access; j must lie inside the window. */
    const HPoly& slot(int d, int j) const;
    HPoly& slot(int d, int j);

    /* Coefficient of q^d w^j: exact zero below the window, OutOfWindow
     * above it. */
    HPoly coeff(int d, int j) const;

    /* Scan of the residue grading invariant over every stored monomial. */
    bool grading_ok() const;

    /* Restriction to a smaller q-order and window top. */
    IExpansion truncated(int qorder, int wmax) const;

    bool operator==(const IExpansion& other) const = default;

private:
    std::size_t index(int d, int j) const;

    int n_;
    int qorder_;
    int wmin_;
    int wmax_;
    int grade_;
    std::vector<HPoly> table_;
};

/* q-Cauchy product with a scalar q-series, applied at every w slot.
 * q-order becomes min(a.qorder, s.order); window and grade are unchanged. */
IExpansion mul_scalar_series(const IExpansion& a, const PowerSeries& s);

/* The recursion operator H + z q d/dq: result[d][j] = H a[d][j] + d a[d][j+1].
 * Slides the window down by one and raises the grade shift by one. */
IExpansion apply_h_plus_zqddq(const IExpansion& a);

/* Multiplication by z (= 1/w): result[d][j] = a[d][j+1]; window slides down,
 * grade shift raises by one. */
IExpansion mul_z(const IExpansion& a);

/* Multiplication by q: result[d][j] = a[d-1][j], truncated at the same
 * q-order. */
IExpansion mul_q(const IExpansion& a);

IExpansion operator+(const IExpansion& a, const IExpansion& b);
IExpansion operator-(const IExpansion& a, const IExpansion& b);
IExpansion operator*(const Rational& scalar, const IExpansion& a);

/* The q-series multiplying H^h at w^j. */
PowerSeries coefficient_series(const IExpansion& a, int h_power, int w_power);

/* The q-series of the H^k coefficient in the w^0 slot (the z = infinity
 * limit). */
PowerSeries extract_hk_at_w0(const IExpansion& a, int k);

} // namespace qgw
