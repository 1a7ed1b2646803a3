#include "qgw/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qgw {

Rational rational(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("rational: zero denominator");
    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

Rational parse_rational(const std::string& text)
{
    std::size_t pos = 0;
    const auto digits = [&](std::size_t from) {
        std::size_t i = from;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        return i;
    };

    if (pos < text.size() && text[pos] == '-')
        ++pos;
    std::size_t num_end = digits(pos);
    if (num_end == pos)
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    pos = num_end;
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
        std::size_t den_begin = ++pos;
        pos = digits(den_begin);
        if (pos == den_begin || pos != text.size())
            throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }

    Rational value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    if (value.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    value.canonicalize();
    return value;
}

Rational binomial(unsigned long top, unsigned long bottom)
{
    if (bottom > top)
        return Rational(0);
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), top, bottom);
    return Rational(result);
}

Rational pow_int(const Rational& base, long exponent)
{
    bool negative = exponent < 0;
    unsigned long e = negative ? static_cast<unsigned long>(-exponent)
                               : static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    if (negative) {
        if (num == 0)
            throw std::domain_error("pow_int: negative power of zero");
        std::swap(num, den);
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

} // namespace qgw
