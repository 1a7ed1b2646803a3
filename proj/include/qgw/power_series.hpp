#pragma once

#include "qgw/rational.hpp"

#include <vector>

namespace qgw {

/* Truncated formal power series sum_{d<=D} c_d q^d with exact Rational
 * coefficients. The truncation order D is explicit: coefficients are known
 * for q^0..q^D and unknown beyond. Binary operations truncate to the
 * minimum of the input orders; unary analytic operations preserve order. */
class PowerSeries {
public:
    /* Zero series of the given order. */
    explicit PowerSeries(int order);

    /* Series with the given coefficients from q^0; order = size - 1. */
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries constant(const Rational& value, int order);

    /* The series q itself (order >= 1). */
    static PowerSeries variable(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    void set_coeff(int d, Rational value);
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& constant_term() const { return coeffs_.front(); }

    bool is_zero() const;

    /* Restriction to a smaller order (new_order <= order). */
    PowerSeries truncated(int new_order) const;

    PowerSeries& operator+=(const PowerSeries& other);
    PowerSeries& operator-=(const PowerSeries& other);
    PowerSeries& operator*=(const Rational& scalar);
    PowerSeries operator-() const;

    bool operator==(const PowerSeries& other) const = default;

private:
    std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& scalar, const PowerSeries& a);

/* Multiplicative inverse; requires a nonzero constant term. */
PowerSeries inverse(const PowerSeries& a);

/* log of a series with constant term 1; the result has constant term 0. */
PowerSeries log_unit(const PowerSeries& a);

/* exp of a series with constant term 0; the result has constant term 1.
 * Inverse of log_unit to truncation. */
PowerSeries exp_nilconst(const PowerSeries& a);

/* q d/dq: the coefficient of q^d becomes d*c_d. */
PowerSeries qddq(const PowerSeries& a);

/* int_0^q a(x)/x dx for a with zero constant term; inverse of qddq. */
PowerSeries integrate_over_x(const PowerSeries& a);

/* a evaluated at q*e^{g(q)}, i.e. sum c_d q^d e^{d g}; g must have zero
 * constant term. */
PowerSeries substitute_qexp(const PowerSeries& a, const PowerSeries& g);

/* Composition a(inner) for inner with zero constant term. */
PowerSeries compose(const PowerSeries& a, const PowerSeries& inner);

/* Compositional inverse b with a(b(Q)) = Q, via Lagrange inversion;
 * requires a = a_1 q + O(q^2) with a_1 != 0. */
PowerSeries reversion(const PowerSeries& a);

/* f^alpha = exp(alpha log f) for f with constant term 1. */
PowerSeries pow_unit(const PowerSeries& f, const Rational& alpha);

} // namespace qgw
