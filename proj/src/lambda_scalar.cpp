// SPDX-License-Identifier: Apache-2.0
#include "umbral/lambda_scalar.hpp"

#include "umbral/errors.hpp"

namespace umbral {

LambdaScalar::LambdaScalar(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw DivisionByZero("λ-fraction with zero denominator");
    normalize();
}

void LambdaScalar::normalize()
{
    if (num_.is_zero()) {
        den_ = RatPoly(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        const RatPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    if (!den_.leading().is_one()) {
        const Rational inv = den_.leading().inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational LambdaScalar::to_rational() const
{
    if (!is_rational())
        throw DomainError("λ-dependent value where a rational was required");
    return num_.coeff(0);
}

Rational LambdaScalar::evaluate(const Rational& v) const
{
    const Rational d = den_.evaluate(v);
    if (d.is_zero())
        throw PoleAtEvaluationPoint("denominator vanishes at λ = " + v.to_string());
    return num_.evaluate(v) / d;
}

LambdaScalar LambdaScalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero in Q(λ)");
    return LambdaScalar(den_, num_);
}

LambdaScalar& LambdaScalar::operator+=(const LambdaScalar& rhs)
{
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ += rhs.num_;
        return *this;
    }
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

LambdaScalar& LambdaScalar::operator-=(const LambdaScalar& rhs)
{
    return *this += -rhs;
}

LambdaScalar& LambdaScalar::operator*=(const LambdaScalar& rhs)
{
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ *= rhs.num_;
        return *this;
    }
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

LambdaScalar& LambdaScalar::operator/=(const LambdaScalar& rhs)
{
    if (rhs.is_zero())
        throw DivisionByZero("division by zero in Q(λ)");
    if (rhs.is_rational())
        return *this *= LambdaScalar(rhs.to_rational().inverse());
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

LambdaScalar LambdaScalar::operator-() const
{
    LambdaScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

LambdaScalar pow(const LambdaScalar& a, int e)
{
    if (e < 0)
        return pow(a.inverse(), -e);
    LambdaScalar result(1);
    LambdaScalar b = a;
    auto k = static_cast<unsigned>(e);
    while (k != 0) {
        if (k & 1U)
            result *= b;
        k >>= 1U;
        if (k != 0)
            b *= b;
    }
    return result;
}

} // namespace umbral
