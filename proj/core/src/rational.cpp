#include "cetaev/rational.hpp"

#include <cmath>

#include "cetaev/error.hpp"

namespace cetaev {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (sgn(denominator) == 0) {
        throw Error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational Rational::from_double(double value)
{
    if (!std::isfinite(value)) {
        throw Error("cannot convert a non-finite double to a rational");
    }
    return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    mpz_class num;
    mpz_class den = 1;
    const auto parse_int = [&](const std::string& part, mpz_class& out) {
        std::string digits = part;
        if (!digits.empty() && digits.front() == '+') {
            digits.erase(0, 1);
        }
        if (digits.empty() || out.set_str(digits, 10) != 0) {
            throw Error("malformed rational '" + s + "'");
        }
    };
    if (slash == std::string::npos) {
        parse_int(s, num);
    } else {
        parse_int(s.substr(0, slash), num);
        parse_int(s.substr(slash + 1), den);
    }
    return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw Error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x)
{
    return Rational(mpq_class(-x.value_));
}

Rational pow(const Rational& x, unsigned k)
{
    Rational result(1);
    Rational base = x;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

}  // namespace cetaev
