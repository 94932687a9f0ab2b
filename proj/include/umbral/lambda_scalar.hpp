// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "umbral/rat_poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Element of the rational function field Q(λ).
///
/// Stored as num/den with den monic and gcd(num, den) = 1, so two equal field
/// elements always have identical representations and == is structural.
class LambdaScalar {
public:
    LambdaScalar() = default;
    LambdaScalar(const Rational& c) : num_(c) {}
    template <std::integral I>
    LambdaScalar(I c) : num_(Rational(c))
    {
    }
    LambdaScalar(RatPoly polynomial) : num_(std::move(polynomial)) {}
    /// Throws DivisionByZero when den is zero.
    LambdaScalar(RatPoly num, RatPoly den);

    /// The indeterminate λ.
    static LambdaScalar lambda() { return LambdaScalar(RatPoly::variable()); }

    [[nodiscard]] const RatPoly& num() const noexcept { return num_; }
    [[nodiscard]] const RatPoly& den() const noexcept { return den_; }

    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }
    /// Element of Q (no λ at all).
    [[nodiscard]] bool is_rational() const { return den_.is_one() && num_.is_constant(); }
    /// Value as a rational; DomainError when λ occurs.
    [[nodiscard]] Rational to_rational() const;

    /// Exact value at λ = v; PoleAtEvaluationPoint when den(v) = 0.
    [[nodiscard]] Rational evaluate(const Rational& v) const;

    [[nodiscard]] LambdaScalar inverse() const;

    LambdaScalar& operator+=(const LambdaScalar& rhs);
    LambdaScalar& operator-=(const LambdaScalar& rhs);
    LambdaScalar& operator*=(const LambdaScalar& rhs);
    LambdaScalar& operator/=(const LambdaScalar& rhs);

    friend LambdaScalar operator+(LambdaScalar a, const LambdaScalar& b) { return a += b; }
    friend LambdaScalar operator-(LambdaScalar a, const LambdaScalar& b) { return a -= b; }
    friend LambdaScalar operator*(LambdaScalar a, const LambdaScalar& b) { return a *= b; }
    friend LambdaScalar operator/(LambdaScalar a, const LambdaScalar& b) { return a /= b; }
    LambdaScalar operator-() const;

    friend bool operator==(const LambdaScalar&, const LambdaScalar&) = default;

private:
    void normalize();

    RatPoly num_;
    RatPoly den_{Rational(1)};
};

/// a^e, negative exponents allowed for nonzero a.
LambdaScalar pow(const LambdaScalar& a, int e);

} // namespace umbral
