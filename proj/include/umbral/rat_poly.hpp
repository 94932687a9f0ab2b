// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "umbral/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace umbral {

/// Dense univariate polynomial over the rationals; index = power.
///
/// Serves as the λ-polynomial ring under LambdaScalar and as the result type of
/// evaluating an XPoly at a rational λ. The coefficient vector never carries a
/// zero leading entry, so the zero polynomial is the empty vector.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(const Rational& constant);
    explicit RatPoly(std::vector<Rational> coefficients);

    static RatPoly monomial(const Rational& c, std::size_t power);
    /// The indeterminate itself.
    static RatPoly variable() { return monomial(Rational(1), 1); }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] Rational coeff(std::size_t k) const;
    [[nodiscard]] const Rational& leading() const;
    [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Number of nonzero terms.
    [[nodiscard]] std::size_t term_count() const;

    [[nodiscard]] Rational evaluate(const Rational& at) const;
    [[nodiscard]] RatPoly monic() const;
    [[nodiscard]] RatPoly derivative() const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& rhs);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const Rational& b) { return a *= b; }
    friend RatPoly operator*(const Rational& a, RatPoly b) { return b *= a; }
    RatPoly operator-() const;

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& dividend, const RatPoly& divisor);
/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);
RatPoly pow(const RatPoly& base, unsigned e);

} // namespace umbral
