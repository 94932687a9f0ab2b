// SPDX-License-Identifier: Apache-2.0
#pragma once

// Reference computations for the tests. Nothing here calls the library's
// series machinery: counts come from brute-force enumeration, polynomials from
// naive products, and expected series coefficients from recurrences solved by
// hand-written loops over Rational / LambdaScalar.

#include "umbral/lambda_scalar.hpp"
#include "umbral/rat_poly.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"
#include "umbral/xpoly.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using umbral::LambdaScalar;
using umbral::RatPoly;
using umbral::Rational;
using umbral::Series;
using umbral::XPoly;

inline LambdaScalar lam() { return LambdaScalar::lambda(); }

inline RatPoly rp(std::vector<Rational> c) { return RatPoly(std::move(c)); }

/// Polynomial in λ from ascending rational coefficients.
inline LambdaScalar lpoly(std::vector<Rational> c) { return LambdaScalar(RatPoly(std::move(c))); }

/// XPoly from ascending coefficients.
inline XPoly xpoly(std::vector<LambdaScalar> c) { return XPoly(std::move(c)); }

/// Calls visit(block_of) for every set partition of {0..n-1}, as restricted
/// growth strings; returns nothing, the visitor counts.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit)
{
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            visit(a, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            a[static_cast<std::size_t>(i)] = b;
            rec(i + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    rec(0, 0);
}

/// Number of partitions of an n-set into k blocks, by enumeration.
inline long count_partitions(int n, int k)
{
    long c = 0;
    for_each_set_partition(n, [&](const std::vector<int>&, int blocks) { c += blocks == k ? 1 : 0; });
    return c;
}

/// Number of ordered set partitions (weak orders) of an n-set: sum over
/// partitions of blocks!.
inline long count_ordered_partitions(int n)
{
    long c = 0;
    for_each_set_partition(n, [&](const std::vector<int>&, int blocks) {
        long f = 1;
        for (int i = 2; i <= blocks; ++i)
            f *= i;
        c += f;
    });
    return c;
}

/// x(x-1)...(x-n+1) expanded by repeated multiplication over Q.
inline RatPoly falling_product(int n, const Rational& step = Rational(1))
{
    RatPoly p(Rational(1));
    for (int i = 0; i < n; ++i)
        p = p * RatPoly(std::vector<Rational>{-step * Rational(i), Rational(1)});
    return p;
}

/// x(x-λ)...(x-(n-1)λ) expanded by repeated multiplication over Q(λ).
inline XPoly degenerate_falling_product(std::size_t n)
{
    XPoly p(1);
    for (std::size_t i = 0; i < n; ++i)
        p = p * xpoly({-lam() * LambdaScalar(static_cast<long>(i)), LambdaScalar(1)});
    return p;
}

/// Bernoulli numbers from sum_{k=0}^{n} binom(n+1,k) B_k = 0.
inline std::vector<Rational> bernoulli_numbers(std::size_t n_max)
{
    std::vector<Rational> b(n_max + 1);
    b[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc;
        for (std::size_t k = 0; k < n; ++k)
            acc += umbral::binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k)) * b[k];
        b[n] = -acc / Rational(static_cast<long>(n + 1));
    }
    return b;
}

/// B_n(x) = sum_k binom(n,k) B_k x^{n-k}.
inline XPoly bernoulli_poly(std::size_t n)
{
    const auto b = bernoulli_numbers(n);
    std::vector<LambdaScalar> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        c[n - k] = LambdaScalar(umbral::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * b[k]);
    return XPoly(std::move(c));
}

/// Euler polynomials from E_n(x) + E_n(x+1) = 2x^n, solved degree by degree:
/// sum_{k<n} binom(n,k) E_k(x) + 2 E_n(x) = 2 x^n.
inline std::vector<XPoly> euler_polys(std::size_t n_max)
{
    std::vector<XPoly> e(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        XPoly acc = XPoly::monomial(LambdaScalar(2), n);
        for (std::size_t k = 0; k < n; ++k)
            acc -= e[k] * LambdaScalar(umbral::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        e[n] = acc * LambdaScalar(Rational(1, 2));
    }
    return e;
}

/// Ordered Bell polynomials from b_n(x) = x^n + sum_{k<n} binom(n,k) ... : the
/// generating function satisfies (2 - e^t) F = e^{xt}, so
/// 2 b_n(x) - sum_k binom(n,k) b_k(x) = x^n, i.e. b_n = x^n + sum_{k<n} binom(n,k) b_k.
inline std::vector<XPoly> ordered_bell_polys(std::size_t n_max)
{
    std::vector<XPoly> b(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        XPoly acc = XPoly::monomial(LambdaScalar(1), n);
        for (std::size_t k = 0; k < n; ++k)
            acc += b[k] * LambdaScalar(umbral::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        b[n] = acc;
    }
    return b;
}

/// Compositional inverse by Lagrange inversion: [t^n] f̄ = (1/n) [t^{n-1}] (t/f)^n.
/// (t/f) is inverted by a plain triangular recurrence, powers by repeated
/// convolution, so only vector arithmetic over Q(λ) is involved.
inline std::vector<LambdaScalar> lagrange_inverse(const std::vector<LambdaScalar>& f, std::size_t n_max)
{
    // q = f/t, known through n_max-1
    std::vector<LambdaScalar> q(f.begin() + 1, f.begin() + static_cast<long>(n_max) + 1);
    std::vector<LambdaScalar> r(n_max);
    r[0] = q[0].inverse();
    for (std::size_t n = 1; n < n_max; ++n) {
        LambdaScalar acc;
        for (std::size_t k = 1; k <= n; ++k)
            acc += q[k] * r[n - k];
        r[n] = -acc * r[0];
    }
    std::vector<LambdaScalar> out(n_max + 1);
    std::vector<LambdaScalar> power(n_max);
    power[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<LambdaScalar> next(n_max);
        for (std::size_t i = 0; i < n_max; ++i)
            for (std::size_t j = 0; i + j < n_max; ++j)
                next[i + j] += power[i] * r[j];
        power = std::move(next);
        out[n] = power[n - 1] * LambdaScalar(Rational(1, static_cast<long>(n)));
    }
    return out;
}

/// Sheffer polynomials solved straight from biorthogonality: with
/// M[k][j] = j! [t^j](g f^k), find s with sum_j M[k][j] s_j = n! δ_{n,k}.
/// g f^k is formed by naive convolution; M is upper triangular.
inline XPoly sheffer_by_orthogonality(const std::vector<LambdaScalar>& g, const std::vector<LambdaScalar>& f,
                                      std::size_t n)
{
    auto conv = [&](const std::vector<LambdaScalar>& a, const std::vector<LambdaScalar>& b) {
        std::vector<LambdaScalar> c(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j)
                c[i + j] += a[i] * b[j];
        return c;
    };
    std::vector<std::vector<LambdaScalar>> rows;
    std::vector<LambdaScalar> cur(g.begin(), g.begin() + static_cast<long>(n) + 1);
    std::vector<LambdaScalar> fn(f.begin(), f.begin() + static_cast<long>(n) + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        rows.push_back(cur);
        cur = conv(cur, fn);
    }
    std::vector<LambdaScalar> s(n + 1);
    for (std::size_t kk = n + 1; kk-- > 0;) {
        LambdaScalar rhs = kk == n ? LambdaScalar(umbral::factorial(static_cast<unsigned>(n))) : LambdaScalar();
        for (std::size_t j = kk + 1; j <= n; ++j)
            rhs -= LambdaScalar(umbral::factorial(static_cast<unsigned>(j))) * rows[kk][j] * s[j];
        s[kk] = rhs / (LambdaScalar(umbral::factorial(static_cast<unsigned>(kk))) * rows[kk][kk]);
    }
    return XPoly(std::move(s));
}

/// Fixed-seed generator of small random exact objects.
class Gen {
public:
    explicit Gen(std::uint64_t seed = 20260415) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational()
    {
        const int d = integer(1, 6);
        return Rational(integer(-9, 9), d);
    }
    Rational nonzero_rational()
    {
        Rational r;
        while (r.is_zero())
            r = rational();
        return r;
    }
    RatPoly rat_poly(int max_degree = 3)
    {
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree) + 1));
        for (auto& v : c)
            v = rational();
        return RatPoly(std::move(c));
    }
    /// Polynomial in λ, or with probability 1/3 a proper fraction.
    LambdaScalar scalar()
    {
        RatPoly num = rat_poly(2);
        if (integer(0, 2) != 0)
            return LambdaScalar(num);
        RatPoly den;
        while (den.is_zero())
            den = rat_poly(2);
        return LambdaScalar(num, den);
    }
    LambdaScalar nonzero_scalar()
    {
        LambdaScalar s;
        while (s.is_zero())
            s = scalar();
        return s;
    }
    LambdaScalar lambda_polynomial() { return LambdaScalar(rat_poly(2)); }
    XPoly xpoly(int max_degree = 4, bool lambda_polynomial_only = false)
    {
        std::vector<LambdaScalar> c(static_cast<std::size_t>(integer(0, max_degree) + 1));
        for (auto& v : c)
            v = lambda_polynomial_only ? lambda_polynomial() : scalar();
        return XPoly(std::move(c));
    }
    Series series(std::size_t trunc, std::size_t min_order = 0)
    {
        std::vector<LambdaScalar> c(trunc + 1);
        for (std::size_t k = min_order; k <= trunc; ++k)
            c[k] = lambda_polynomial();
        if (min_order <= trunc)
            c[min_order] = LambdaScalar(nonzero_rational());
        return Series(std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

} // namespace oracle
