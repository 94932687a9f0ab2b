// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "umbral/lambda_scalar.hpp"
#include "umbral/rat_poly.hpp"

#include <cstddef>
#include <vector>

namespace umbral {

/// Polynomial in x with coefficients in Q(λ). Index = power of x; no zero
/// leading coefficient is ever stored.
class XPoly {
public:
    XPoly() = default;
    XPoly(const LambdaScalar& constant);
    template <std::integral I>
    XPoly(I constant) : XPoly(LambdaScalar(constant))
    {
    }
    explicit XPoly(std::vector<LambdaScalar> coefficients);

    static XPoly x() { return monomial(LambdaScalar(1), 1); }
    static XPoly monomial(const LambdaScalar& c, std::size_t power);
    /// Lift a rational x-polynomial.
    static XPoly from_rational(const RatPoly& p);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for zero.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] LambdaScalar coeff(std::size_t k) const;
    [[nodiscard]] const std::vector<LambdaScalar>& coefficients() const noexcept { return coeffs_; }
    /// Every coefficient lies in Q[λ].
    [[nodiscard]] bool is_lambda_polynomial() const;
    /// No coefficient mentions λ.
    [[nodiscard]] bool is_lambda_free() const;

    /// d^k/dx^k.
    [[nodiscard]] XPoly derivative(std::size_t k = 1) const;
    /// The antiderivative vanishing at x = 0.
    [[nodiscard]] XPoly antiderivative() const;
    /// p(x + c).
    [[nodiscard]] XPoly shift(const LambdaScalar& c) const;
    /// p(c) as an element of Q(λ).
    [[nodiscard]] LambdaScalar evaluate(const LambdaScalar& c) const;
    /// Coefficientwise λ = v. PoleAtEvaluationPoint if some denominator vanishes.
    [[nodiscard]] RatPoly eval_lambda(const Rational& v) const;
    [[nodiscard]] XPoly mul_x() const;
    /// p(x)/x; NotDivisibleByX when p(0) ≠ 0.
    [[nodiscard]] XPoly div_x() const;

    XPoly& operator+=(const XPoly& rhs);
    XPoly& operator-=(const XPoly& rhs);
    XPoly& operator*=(const LambdaScalar& rhs);

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(XPoly a, const LambdaScalar& b) { return a *= b; }
    friend XPoly operator*(const LambdaScalar& a, XPoly b) { return b *= a; }
    XPoly operator-() const;

    friend bool operator==(const XPoly&, const XPoly&) = default;

private:
    void trim();
    std::vector<LambdaScalar> coeffs_;
};

XPoly pow(const XPoly& base, unsigned e);

} // namespace umbral
