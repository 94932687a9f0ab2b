// SPDX-License-Identifier: Apache-2.0
#include "umbral/xpoly.hpp"

#include "umbral/errors.hpp"

#include <algorithm>

namespace umbral {

XPoly::XPoly(const LambdaScalar& constant)
{
    if (!constant.is_zero())
        coeffs_.push_back(constant);
}

XPoly::XPoly(std::vector<LambdaScalar> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

XPoly XPoly::monomial(const LambdaScalar& c, std::size_t power)
{
    if (c.is_zero())
        return {};
    std::vector<LambdaScalar> v(power + 1);
    v[power] = c;
    return XPoly(std::move(v));
}

XPoly XPoly::from_rational(const RatPoly& p)
{
    std::vector<LambdaScalar> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients())
        v.emplace_back(c);
    return XPoly(std::move(v));
}

void XPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

LambdaScalar XPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : LambdaScalar{};
}

bool XPoly::is_lambda_polynomial() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const LambdaScalar& c) { return c.is_polynomial(); });
}

bool XPoly::is_lambda_free() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const LambdaScalar& c) { return c.is_rational(); });
}

XPoly XPoly::derivative(std::size_t k) const
{
    if (coeffs_.size() <= k)
        return {};
    std::vector<LambdaScalar> d(coeffs_.size() - k);
    for (std::size_t i = k; i < coeffs_.size(); ++i) {
        // i!/(i-k)!
        Rational falling(1);
        for (std::size_t j = 0; j < k; ++j)
            falling *= Rational(static_cast<long>(i - j));
        d[i - k] = coeffs_[i] * LambdaScalar(falling);
    }
    return XPoly(std::move(d));
}

XPoly XPoly::antiderivative() const
{
    if (coeffs_.empty())
        return {};
    std::vector<LambdaScalar> a(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        a[i + 1] = coeffs_[i] * LambdaScalar(Rational(1, static_cast<long>(i + 1)));
    return XPoly(std::move(a));
}

XPoly XPoly::shift(const LambdaScalar& c) const
{
    // Horner in (x + c).
    const XPoly step = XPoly::x() + XPoly(c);
    XPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * step + XPoly(*it);
    return acc;
}

LambdaScalar XPoly::evaluate(const LambdaScalar& c) const
{
    LambdaScalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * c + *it;
    return acc;
}

RatPoly XPoly::eval_lambda(const Rational& v) const
{
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c.evaluate(v));
    return RatPoly(std::move(out));
}

XPoly XPoly::mul_x() const
{
    if (coeffs_.empty())
        return {};
    std::vector<LambdaScalar> v;
    v.reserve(coeffs_.size() + 1);
    v.emplace_back();
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return XPoly(std::move(v));
}

XPoly XPoly::div_x() const
{
    if (coeffs_.empty())
        return {};
    if (!coeffs_.front().is_zero())
        throw NotDivisibleByX("polynomial has a nonzero constant term");
    return XPoly(std::vector<LambdaScalar>(coeffs_.begin() + 1, coeffs_.end()));
}

XPoly& XPoly::operator+=(const XPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

XPoly& XPoly::operator*=(const LambdaScalar& rhs)
{
    if (rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= rhs;
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<LambdaScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (!b.coeffs_[j].is_zero())
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return XPoly(std::move(out));
}

XPoly XPoly::operator-() const
{
    XPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

XPoly pow(const XPoly& base, unsigned e)
{
    XPoly result(1);
    for (unsigned i = 0; i < e; ++i)
        result = result * base;
    return result;
}

} // namespace umbral
