#include "qgw/iexpansion.hpp"

#include "qgw/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qgw {

namespace {

int mod_n(int value, int n)
{
    int r = value % n;
    return r < 0 ? r + n : r;
}

void require_compatible(const IExpansion& a, const IExpansion& b, const char* op)
{
    if (a.n() != b.n())
        throw DimensionMismatch(std::string(op) + ": ring dimensions differ");
    if (a.grade() != b.grade())
        throw DimensionMismatch(std::string(op) + ": grade shifts differ");
}

} // namespace

IExpansion::IExpansion(int n, int qorder, int wmin, int wmax, int grade)
    : n_(n), qorder_(qorder), wmin_(wmin), wmax_(wmax), grade_(mod_n(grade, n))
{
    if (n < 1)
        throw std::invalid_argument("IExpansion: ring dimension must be positive");
    if (qorder < 0)
        throw std::invalid_argument("IExpansion: negative q-order");
    if (wmax < wmin)
        throw WindowExhausted("IExpansion: empty w-window");
    const std::size_t width = static_cast<std::size_t>(wmax - wmin + 1);
    table_.assign(static_cast<std::size_t>(qorder + 1) * width, HPoly(n));
}

std::size_t IExpansion::index(int d, int j) const
{
    if (d < 0 || d > qorder_)
        throw std::out_of_range("IExpansion: q-degree out of range");
    if (j < wmin_ || j > wmax_)
        throw std::out_of_range("IExpansion: w-index outside window");
    const std::size_t width = static_cast<std::size_t>(wmax_ - wmin_ + 1);
    return static_cast<std::size_t>(d) * width + static_cast<std::size_t>(j - wmin_);
}

const HPoly& IExpansion::slot(int d, int j) const
{
    return table_[index(d, j)];
}

HPoly& IExpansion::slot(int d, int j)
{
    return table_[index(d, j)];
}

HPoly IExpansion::coeff(int d, int j) const
{
    if (d < 0 || d > qorder_)
        throw std::out_of_range("IExpansion: q-degree out of range");
    if (j > wmax_)
        throw OutOfWindow("IExpansion::coeff: w-index above truncation window");
    if (j < wmin_)
        return HPoly(n_);
    return slot(d, j);
}

bool IExpansion::grading_ok() const
{
    for (int d = 0; d <= qorder_; ++d)
        for (int j = wmin_; j <= wmax_; ++j) {
            const HPoly& c = slot(d, j);
            for (int a = 0; a < n_; ++a)
                if (sgn(c.coeff(a)) != 0 && mod_n(a - j - grade_, n_) != 0)
                    return false;
        }
    return true;
}

IExpansion IExpansion::truncated(int qorder, int wmax) const
{
    if (qorder < 0 || qorder > qorder_ || wmax < wmin_ || wmax > wmax_)
        throw std::invalid_argument("IExpansion::truncated: range out of bounds");
    IExpansion out(n_, qorder, wmin_, wmax, grade_);
    for (int d = 0; d <= qorder; ++d)
        for (int j = wmin_; j <= wmax; ++j)
            out.slot(d, j) = slot(d, j);
    return out;
}

IExpansion mul_scalar_series(const IExpansion& a, const PowerSeries& s)
{
    const int qorder = std::min(a.qorder(), s.order());
    IExpansion out(a.n(), qorder, a.wmin(), a.wmax(), a.grade());
    for (int j = a.wmin(); j <= a.wmax(); ++j)
        for (int d = 0; d <= qorder; ++d) {
            HPoly acc(a.n());
            for (int i = 0; i <= d; ++i) {
                if (sgn(s.coeff(i)) == 0)
                    continue;
                acc += s.coeff(i) * a.slot(d - i, j);
            }
            out.slot(d, j) = std::move(acc);
        }
    return out;
}

IExpansion apply_h_plus_zqddq(const IExpansion& a)
{
    IExpansion out(a.n(), a.qorder(), a.wmin() - 1, a.wmax() - 1, a.grade() + 1);
    for (int d = 0; d <= a.qorder(); ++d)
        for (int j = a.wmin() - 1; j <= a.wmax() - 1; ++j) {
            HPoly acc(a.n());
            if (j >= a.wmin())
                acc = a.slot(d, j).mul_h();
            if (d > 0)
                acc += Rational(d) * a.slot(d, j + 1);
            out.slot(d, j) = std::move(acc);
        }
    return out;
}

IExpansion mul_z(const IExpansion& a)
{
    IExpansion out(a.n(), a.qorder(), a.wmin() - 1, a.wmax() - 1, a.grade() + 1);
    for (int d = 0; d <= a.qorder(); ++d)
        for (int j = a.wmin() - 1; j <= a.wmax() - 1; ++j)
            out.slot(d, j) = a.slot(d, j + 1);
    return out;
}

IExpansion mul_q(const IExpansion& a)
{
    IExpansion out(a.n(), a.qorder(), a.wmin(), a.wmax(), a.grade());
    for (int d = 1; d <= a.qorder(); ++d)
        for (int j = a.wmin(); j <= a.wmax(); ++j)
            out.slot(d, j) = a.slot(d - 1, j);
    return out;
}

IExpansion operator+(const IExpansion& a, const IExpansion& b)
{
    require_compatible(a, b, "IExpansion::operator+");
    const int qorder = std::min(a.qorder(), b.qorder());
    const int wmin = std::min(a.wmin(), b.wmin());
    const int wmax = std::min(a.wmax(), b.wmax());
    if (wmax < wmin)
        throw WindowExhausted("IExpansion::operator+: windows do not overlap");
    IExpansion out(a.n(), qorder, wmin, wmax, a.grade());
    for (int d = 0; d <= qorder; ++d)
        for (int j = wmin; j <= wmax; ++j)
            out.slot(d, j) = a.coeff(d, j) + b.coeff(d, j);
    return out;
}

IExpansion operator-(const IExpansion& a, const IExpansion& b)
{
    return a + Rational(-1) * b;
}

IExpansion operator*(const Rational& scalar, const IExpansion& a)
{
    IExpansion out = a;
    for (int d = 0; d <= a.qorder(); ++d)
        for (int j = a.wmin(); j <= a.wmax(); ++j)
            out.slot(d, j) *= scalar;
    return out;
}

PowerSeries coefficient_series(const IExpansion& a, int h_power, int w_power)
{
    if (h_power < 0 || h_power >= a.n())
        throw std::invalid_argument("coefficient_series: H-power out of range");
    if (w_power > a.wmax())
        throw OutOfWindow("coefficient_series: w-index above truncation window");
    PowerSeries out(a.qorder());
    if (w_power < a.wmin())
        return out;
    for (int d = 0; d <= a.qorder(); ++d)
        out.set_coeff(d, a.slot(d, w_power).coeff(h_power));
    return out;
}

PowerSeries extract_hk_at_w0(const IExpansion& a, int k)
{
    return coefficient_series(a, k, 0);
}

} // namespace qgw
