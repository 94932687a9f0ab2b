// SPDX-License-Identifier: Apache-2.0
#include "umbral/rational.hpp"

#include "umbral/errors.hpp"

#include <cctype>
#include <ostream>

namespace umbral {

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!valid_integer(s))
        throw ParseError("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(mpq_class(parse_integer(text)));
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw DivisionByZero("rational literal with zero denominator");
    return Rational(mpq_class(num, den));
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1) / value_);
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
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
    if (rhs.is_zero())
        throw DivisionByZero("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k)
{
    if (k > n)
        return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

Rational power(const Rational& a, int e)
{
    if (e < 0)
        return power(a.inverse(), -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), a.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), a.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den));
}

} // namespace umbral
