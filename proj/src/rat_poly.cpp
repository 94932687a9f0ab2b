// SPDX-License-Identifier: Apache-2.0
#include "umbral/rat_poly.hpp"

#include "umbral/errors.hpp"

#include <algorithm>

namespace umbral {

RatPoly::RatPoly(const Rational& constant)
{
    if (!constant.is_zero())
        coeffs_.push_back(constant);
}

RatPoly::RatPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

RatPoly RatPoly::monomial(const Rational& c, std::size_t power)
{
    if (c.is_zero())
        return {};
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& RatPoly::leading() const
{
    if (coeffs_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

std::size_t RatPoly::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

Rational RatPoly::evaluate(const Rational& at) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

RatPoly RatPoly::monic() const
{
    if (is_zero())
        return {};
    const Rational inv = leading().inverse();
    return *this * inv;
}

RatPoly RatPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return RatPoly(std::move(d));
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= rhs;
    return *this;
}

RatPoly RatPoly::operator-() const
{
    RatPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& dividend, const RatPoly& divisor)
{
    if (divisor.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (dividend.degree() < divisor.degree())
        return {RatPoly{}, dividend};

    std::vector<Rational> rem = dividend.coefficients();
    const auto& d = divisor.coefficients();
    const std::size_t dn = d.size() - 1;
    const Rational lead_inv = d.back().inverse();
    std::vector<Rational> quot(rem.size() - dn);
    for (std::size_t k = rem.size(); k-- > dn;) {
        if (rem[k].is_zero())
            continue;
        const Rational q = rem[k] * lead_inv;
        quot[k - dn] = q;
        for (std::size_t j = 0; j <= dn; ++j)
            rem[k - dn + j] -= q * d[j];
    }
    rem.resize(dn);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b)
{
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

RatPoly pow(const RatPoly& base, unsigned e)
{
    RatPoly result(Rational(1));
    RatPoly b = base;
    while (e != 0) {
        if (e & 1U)
            result *= b;
        e >>= 1U;
        if (e != 0)
            b *= b;
    }
    return result;
}

} // namespace umbral
