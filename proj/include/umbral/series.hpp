// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "umbral/errors.hpp"
#include "umbral/lambda_scalar.hpp"
#include "umbral/xpoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umbral {

/// Truncated formal power series sum_{k=0}^{N} c_k t^k.
///
/// Storage convention, used everywhere: c_k is the plain coefficient of t^k.
/// The exponential view a_k = k! c_k (the form in which a series acts as a
/// linear functional on polynomials) is available through egf_coeff() and is
/// never stored. N is explicit and binary operations demand equal N.
///
/// R is the coefficient ring: LambdaScalar for ordinary series, XPoly for the
/// bivariate generating functions in t and x.
template <class R>
class PowerSeries {
public:
    explicit PowerSeries(std::vector<R> coefficients) : coeffs_(std::move(coefficients))
    {
        if (coeffs_.empty())
            throw DomainError("a series needs at least its constant term");
    }

    static PowerSeries zero(std::size_t trunc) { return PowerSeries(std::vector<R>(trunc + 1)); }
    static PowerSeries constant(const R& c, std::size_t trunc)
    {
        std::vector<R> v(trunc + 1);
        v[0] = c;
        return PowerSeries(std::move(v));
    }
    static PowerSeries monomial(const R& c, std::size_t power, std::size_t trunc)
    {
        std::vector<R> v(trunc + 1);
        if (power <= trunc)
            v[power] = c;
        return PowerSeries(std::move(v));
    }
    /// The series t.
    static PowerSeries variable(std::size_t trunc) { return monomial(R(1), 1, trunc); }

    [[nodiscard]] std::size_t trunc() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] const std::vector<R>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] const R& operator[](std::size_t k) const { return coeffs_.at(k); }
    [[nodiscard]] const R& coeff(std::size_t k) const
    {
        if (k > trunc())
            throw TruncationTooLow("coefficient " + std::to_string(k) + " beyond truncation " +
                                   std::to_string(trunc()));
        return coeffs_[k];
    }
    /// k! times the plain coefficient.
    [[nodiscard]] R egf_coeff(std::size_t k) const
    {
        return coeff(k) * LambdaScalar(factorial(static_cast<unsigned>(k)));
    }

    /// Smallest k with a nonzero coefficient; nullopt if zero through N.
    [[nodiscard]] std::optional<std::size_t> order() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero())
                return k;
        return std::nullopt;
    }

    [[nodiscard]] PowerSeries truncated(std::size_t new_trunc) const
    {
        if (new_trunc > trunc())
            throw TruncationTooLow("cannot raise truncation from " + std::to_string(trunc()) + " to " +
                                   std::to_string(new_trunc));
        return PowerSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_trunc + 1));
    }

    /// f(t)/t^k; the result is known only through N-k.
    [[nodiscard]] PowerSeries div_t(std::size_t k = 1) const
    {
        if (k > trunc())
            throw TruncationTooLow("division by t^" + std::to_string(k) + " exhausts the series");
        for (std::size_t i = 0; i < k; ++i)
            if (!coeffs_[i].is_zero())
                throw NotDivisibleByT("coefficient of t^" + std::to_string(i) + " is nonzero");
        return PowerSeries(std::vector<R>(coeffs_.begin() + k, coeffs_.end()));
    }

    /// d/dt; the result is known only through N-1.
    [[nodiscard]] PowerSeries derivative() const
    {
        if (trunc() == 0)
            throw TruncationTooLow("derivative of a series truncated at 0");
        std::vector<R> d(trunc());
        for (std::size_t k = 1; k <= trunc(); ++k)
            d[k - 1] = coeffs_[k] * LambdaScalar(static_cast<long>(k));
        return PowerSeries(std::move(d));
    }

    PowerSeries& operator+=(const PowerSeries& rhs)
    {
        check_same(rhs);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] += rhs.coeffs_[k];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& rhs)
    {
        check_same(rhs);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] -= rhs.coeffs_[k];
        return *this;
    }
    PowerSeries& operator*=(const LambdaScalar& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const LambdaScalar& s) { return a *= s; }
    friend PowerSeries operator*(const LambdaScalar& s, PowerSeries a) { return a *= s; }
    PowerSeries operator-() const
    {
        PowerSeries r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    /// Cauchy product truncated at N.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
    {
        a.check_same(b);
        const std::size_t n = a.trunc();
        std::vector<R> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j <= n; ++j)
                if (!b.coeffs_[j].is_zero())
                    out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return PowerSeries(std::move(out));
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    void check_same(const PowerSeries& other) const
    {
        if (other.trunc() != trunc())
            throw TruncationMismatch("truncation orders " + std::to_string(trunc()) + " and " +
                                     std::to_string(other.trunc()));
    }

    std::vector<R> coeffs_;
};

using Series = PowerSeries<LambdaScalar>;
/// Series in t whose coefficients are polynomials in x.
using XSeries = PowerSeries<XPoly>;

template <class R>
PowerSeries<R> pow(const PowerSeries<R>& base, unsigned e)
{
    auto result = PowerSeries<R>::constant(R(1), base.trunc());
    for (unsigned i = 0; i < e; ++i)
        result = result * base;
    return result;
}

/// Formal exp; DomainError unless the constant term vanishes.
/// Uses n h_n = sum_{k=1}^{n} k f_k h_{n-k} from h' = f' h.
template <class R>
PowerSeries<R> exp(const PowerSeries<R>& f)
{
    if (!f[0].is_zero())
        throw DomainError("exp needs a series with zero constant term");
    const std::size_t n = f.trunc();
    std::vector<R> h(n + 1);
    h[0] = R(1);
    for (std::size_t m = 1; m <= n; ++m) {
        R acc;
        for (std::size_t k = 1; k <= m; ++k)
            if (!f[k].is_zero())
                acc += f[k] * LambdaScalar(static_cast<long>(k)) * h[m - k];
        h[m] = acc * LambdaScalar(Rational(1, static_cast<long>(m)));
    }
    return PowerSeries<R>(std::move(h));
}

/// Formal log; DomainError unless the constant term is 1.
Series log(const Series& f);
/// Multiplicative inverse; NotInvertible when f(0) = 0.
Series reciprocal(const Series& f);
/// f(g(t)); CompositionOrderError when g(0) ≠ 0.
Series compose(const Series& f, const Series& g);
/// f̄ with f(f̄(t)) = f̄(f(t)) = t; NotCompositionallyInvertible unless order(f) = 1.
Series comp_inverse(const Series& f);
/// (1 + base·t)^exponent; the t^n coefficient is binom(exponent, n)·base^n.
Series binomial_power(const LambdaScalar& base, const LambdaScalar& exponent, std::size_t trunc);
/// e^{c t}.
Series exp_scaled(const LambdaScalar& c, std::size_t trunc);

/// Constant-coefficient embedding of a scalar series into XSeries.
XSeries lift(const Series& f);
/// e^{x·u(t)} for order(u) ≥ 1; the t^n coefficient is a polynomial of degree ≤ n in x.
XSeries exp_x(const Series& u);

} // namespace umbral
