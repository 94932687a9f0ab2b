// SPDX-License-Identifier: Apache-2.0
#include "umbral/series.hpp"

namespace umbral {

Series reciprocal(const Series& f)
{
    if (f[0].is_zero())
        throw NotInvertible("constant term is zero");
    const std::size_t n = f.trunc();
    const LambdaScalar inv0 = f[0].inverse();
    std::vector<LambdaScalar> h(n + 1);
    h[0] = inv0;
    for (std::size_t m = 1; m <= n; ++m) {
        LambdaScalar acc;
        for (std::size_t k = 1; k <= m; ++k)
            if (!f[k].is_zero())
                acc += f[k] * h[m - k];
        h[m] = -(acc * inv0);
    }
    return Series(std::move(h));
}

Series log(const Series& f)
{
    if (!f[0].is_one())
        throw DomainError("log needs constant term 1");
    const std::size_t n = f.trunc();
    if (n == 0)
        return Series::zero(0);
    // (log f)' = f'/f, integrated term by term.
    const Series q = f.derivative() * reciprocal(f.truncated(n - 1));
    std::vector<LambdaScalar> out(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        out[k] = q[k - 1] * LambdaScalar(Rational(1, static_cast<long>(k)));
    return Series(std::move(out));
}

Series compose(const Series& f, const Series& g)
{
    if (f.trunc() != g.trunc())
        throw TruncationMismatch("compose: truncation orders differ");
    if (!g[0].is_zero())
        throw CompositionOrderError("inner series has a nonzero constant term");
    const std::size_t n = f.trunc();
    // Horner; the product with g raises the order, so no term beyond N is lost.
    Series acc = Series::constant(f[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * g;
        acc += Series::constant(f[k], n);
    }
    return acc;
}

Series comp_inverse(const Series& f)
{
    if (f.trunc() < 1 || !f[0].is_zero() || f[1].is_zero())
        throw NotCompositionallyInvertible("order must be exactly 1");
    const std::size_t n = f.trunc();
    const LambdaScalar inv1 = f[1].inverse();
    std::vector<LambdaScalar> g(n + 1);
    g[1] = inv1;
    // [t^m] f(g) = f_1 g_m + (terms fixed by g_1..g_{m-1}); solve for g_m.
    for (std::size_t m = 2; m <= n; ++m) {
        const Series partial = compose(f, Series(g));
        g[m] = -(partial[m] * inv1);
    }
    return Series(std::move(g));
}

Series binomial_power(const LambdaScalar& base, const LambdaScalar& exponent, std::size_t trunc)
{
    std::vector<LambdaScalar> out(trunc + 1);
    LambdaScalar term(1);
    out[0] = term;
    for (std::size_t k = 1; k <= trunc; ++k) {
        term *= (exponent - LambdaScalar(static_cast<long>(k - 1))) * base *
                LambdaScalar(Rational(1, static_cast<long>(k)));
        out[k] = term;
    }
    return Series(std::move(out));
}

Series exp_scaled(const LambdaScalar& c, std::size_t trunc)
{
    std::vector<LambdaScalar> out(trunc + 1);
    LambdaScalar term(1);
    out[0] = term;
    for (std::size_t k = 1; k <= trunc; ++k) {
        term *= c * LambdaScalar(Rational(1, static_cast<long>(k)));
        out[k] = term;
    }
    return Series(std::move(out));
}

XSeries lift(const Series& f)
{
    std::vector<XPoly> v;
    v.reserve(f.trunc() + 1);
    for (const auto& c : f.coefficients())
        v.emplace_back(c);
    return XSeries(std::move(v));
}

XSeries exp_x(const Series& u)
{
    if (!u[0].is_zero())
        throw DomainError("exp_x needs a series with zero constant term");
    std::vector<XPoly> v;
    v.reserve(u.trunc() + 1);
    for (const auto& c : u.coefficients())
        v.push_back(XPoly::monomial(c, 1));
    return exp(XSeries(std::move(v)));
}

} // namespace umbral
