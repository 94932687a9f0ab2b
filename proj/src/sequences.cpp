// SPDX-License-Identifier: Apache-2.0
#include "umbral/sequences.hpp"

#include "umbral/errors.hpp"

#include <mutex>
#include <string>

namespace umbral {

namespace {

using Triangle = std::vector<std::vector<Rational>>;

enum class StirlingKind { First, Second };

// Rows are appended on demand and never modified afterwards.
Rational stirling_lookup(StirlingKind kind, int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw IndexOutOfRange("Stirling(" + std::to_string(n) + ", " + std::to_string(k) + ")");

    static std::mutex mutex;
    static Triangle first{{Rational(1)}};
    static Triangle second{{Rational(1)}};

    const std::lock_guard lock(mutex);
    Triangle& t = kind == StirlingKind::First ? first : second;
    while (static_cast<int>(t.size()) <= n) {
        const auto m = static_cast<long>(t.size()) - 1;  // build row m + 1
        const auto& prev = t.back();
        std::vector<Rational> row(static_cast<std::size_t>(m) + 2);
        for (long j = 0; j <= m + 1; ++j) {
            const Rational left = j >= 1 ? prev[static_cast<std::size_t>(j - 1)] : Rational(0);
            const Rational same = j <= m ? prev[static_cast<std::size_t>(j)] : Rational(0);
            // S1(m+1,j) = S1(m,j-1) - m S1(m,j);  S2(m+1,j) = S2(m,j-1) + j S2(m,j)
            row[static_cast<std::size_t>(j)] =
                kind == StirlingKind::First ? left - Rational(m) * same : left + Rational(j) * same;
        }
        t.push_back(std::move(row));
    }
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

LambdaScalar scalar(const Rational& r)
{
    return LambdaScalar(r);
}

LambdaScalar lambda_pow(std::size_t e)
{
    return LambdaScalar(RatPoly::monomial(Rational(1), e));
}

unsigned u(std::size_t v)
{
    return static_cast<unsigned>(v);
}

int i(std::size_t v)
{
    return static_cast<int>(v);
}

std::vector<XPoly> extract_polys(const XSeries& gf, std::size_t n_max)
{
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(gf.egf_coeff(n));
    return out;
}

std::vector<LambdaScalar> constant_terms(const std::vector<XPoly>& polys)
{
    std::vector<LambdaScalar> out;
    out.reserve(polys.size());
    for (const auto& p : polys)
        out.push_back(p.coeff(0));
    return out;
}

FamilyTable make_table(std::string id, std::size_t n_max, std::vector<XPoly> polys, bool with_numbers)
{
    for (std::size_t n = 0; n < polys.size(); ++n)
        if (polys[n].degree() != static_cast<long>(n))
            throw DomainError(id + ": entry " + std::to_string(n) + " has degree " +
                              std::to_string(polys[n].degree()));
    FamilyTable t;
    t.id = std::move(id);
    t.n_max = n_max;
    if (with_numbers)
        t.numbers = constant_terms(polys);
    t.polys = std::move(polys);
    return t;
}

void require_lambda_polynomial(const FamilyTable& t)
{
    for (std::size_t n = 0; n < t.polys.size(); ++n)
        if (!t.polys[n].is_lambda_polynomial())
            throw NonPolynomialCoefficient(t.id + ": entry " + std::to_string(n) +
                                           " has a coefficient outside Q[λ]");
}

Series two_minus(const Series& s)
{
    return Series::constant(LambdaScalar(2), s.trunc()) - s;
}

/// 1/(2 - e^t).
Series ordered_bell_gf(std::size_t trunc)
{
    return reciprocal(two_minus(exp_scaled(LambdaScalar(1), trunc)));
}

/// 1/(2 - (1+λt)^{1/λ}).
Series degenerate_bell_gf(std::size_t trunc)
{
    return reciprocal(two_minus(degenerate_exp(trunc)));
}

} // namespace

Rational stirling1(int n, int k)
{
    return stirling_lookup(StirlingKind::First, n, k);
}

Rational stirling2(int n, int k)
{
    return stirling_lookup(StirlingKind::Second, n, k);
}

Series exp_minus_one(std::size_t trunc)
{
    return exp_scaled(LambdaScalar(1), trunc) - Series::constant(LambdaScalar(1), trunc);
}

Series degenerate_exp(std::size_t trunc)
{
    const LambdaScalar lam = LambdaScalar::lambda();
    return binomial_power(lam, lam.inverse(), trunc);
}

Series degenerate_log(std::size_t trunc)
{
    std::vector<LambdaScalar> c(trunc + 1);
    const LambdaScalar minus_lambda = -LambdaScalar::lambda();
    for (std::size_t k = 1; k <= trunc; ++k)
        c[k] = pow(minus_lambda, i(k) - 1) * scalar(Rational(1, static_cast<long>(k)));
    return Series(std::move(c));
}

Series degenerate_exp_minus_one(std::size_t trunc)
{
    std::vector<LambdaScalar> c(trunc + 1);
    for (std::size_t k = 1; k <= trunc; ++k)
        c[k] = lambda_pow(k - 1) * scalar(factorial(u(k)).inverse());
    return Series(std::move(c));
}

ShefferPair degenerate_bell_pair(std::size_t trunc)
{
    return {two_minus(exp_scaled(LambdaScalar(1), trunc)), degenerate_exp_minus_one(trunc)};
}

ShefferPair degenerate_falling_pair(std::size_t trunc)
{
    return {Series::constant(LambdaScalar(1), trunc), degenerate_exp_minus_one(trunc)};
}

ShefferPair korobov_pair(std::size_t trunc)
{
    // (e^{λt}-1)/(λ(e^t-1)) = [((e^{λt}-1)/λ)/t] / [(e^t-1)/t]
    const Series num = degenerate_exp_minus_one(trunc + 1).div_t();
    const Series den = exp_minus_one(trunc + 1).div_t();
    return {num * reciprocal(den), exp_minus_one(trunc)};
}

ShefferPair monomial_pair(std::size_t trunc)
{
    return {Series::constant(LambdaScalar(1), trunc), Series::variable(trunc)};
}

FamilyTable ordered_bell(std::size_t n_max)
{
    const XSeries gf = lift(ordered_bell_gf(n_max)) * exp_x(Series::variable(n_max));
    return make_table("bell", n_max, extract_polys(gf, n_max), true);
}

FamilyTable higher_order_ordered_bell(int r, std::size_t n_max)
{
    if (r < 1)
        throw InvalidOrder("higher-order ordered Bell needs r ≥ 1, got " + std::to_string(r));
    const Series base = pow(ordered_bell_gf(n_max), static_cast<unsigned>(r));
    const XSeries gf = lift(base) * exp_x(Series::variable(n_max));
    return make_table("bell_r", n_max, extract_polys(gf, n_max), true);
}

BernoulliEulerTables bernoulli_euler(std::size_t n_max)
{
    const Series t_over = reciprocal(exp_minus_one(n_max + 1).div_t());  // t/(e^t-1)
    const XSeries ext = exp_x(Series::variable(n_max));

    BernoulliEulerTables out;
    out.bernoulli = make_table("bernoulli", n_max, extract_polys(lift(t_over) * ext, n_max), true);

    const Series euler_gf =
        LambdaScalar(2) * reciprocal(exp_scaled(LambdaScalar(1), n_max) + Series::constant(LambdaScalar(1), n_max));
    out.euler = make_table("euler", n_max, extract_polys(lift(euler_gf) * ext, n_max), true);

    out.higher_order.resize(n_max + 1);
    Series power = Series::constant(LambdaScalar(1), n_max);
    for (std::size_t alpha = 0; alpha <= n_max; ++alpha) {
        auto& row = out.higher_order[alpha];
        row.reserve(n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n)
            row.push_back(power.egf_coeff(n).to_rational());
        power = power * t_over;
    }
    return out;
}

CarlitzTables carlitz_degenerate(std::size_t n_max)
{
    const XSeries ext = exp_x(degenerate_log(n_max));  // (1+λt)^{x/λ}
    const Series dexp = degenerate_exp(n_max);

    CarlitzTables out;
    const Series euler_gf = LambdaScalar(2) * reciprocal(dexp + Series::constant(LambdaScalar(1), n_max));
    out.euler = make_table("carlitz_euler", n_max, extract_polys(lift(euler_gf) * ext, n_max), true);

    // t/((1+λt)^{1/λ} - 1): cancel one power of t before inverting.
    const Series shifted = (degenerate_exp(n_max + 1) - Series::constant(LambdaScalar(1), n_max + 1)).div_t();
    out.bernoulli =
        make_table("carlitz_bernoulli", n_max, extract_polys(lift(reciprocal(shifted)) * ext, n_max), true);
    require_lambda_polynomial(out.euler);
    require_lambda_polynomial(out.bernoulli);
    return out;
}

FamilyTable degenerate_ordered_bell(std::size_t n_max)
{
    const XSeries gf = lift(degenerate_bell_gf(n_max)) * exp_x(degenerate_log(n_max));
    FamilyTable t = make_table("dbell", n_max, extract_polys(gf, n_max), true);
    require_lambda_polynomial(t);
    return t;
}

FamilyTable degenerate_falling_factorial(std::size_t n_max)
{
    std::vector<XPoly> polys;
    polys.reserve(n_max + 1);
    XPoly acc(1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        polys.push_back(acc);
        acc = acc * (XPoly::x() - XPoly(lambda_pow(1) * scalar(Rational(static_cast<long>(n)))));
    }
    return make_table("dfalling", n_max, std::move(polys), false);
}

FamilyTable falling_factorial(std::size_t n_max)
{
    std::vector<XPoly> polys;
    polys.reserve(n_max + 1);
    XPoly acc(1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        polys.push_back(acc);
        acc = acc * (XPoly::x() - XPoly(LambdaScalar(static_cast<long>(n))));
    }
    return make_table("falling", n_max, std::move(polys), false);
}

FamilyTable korobov(std::size_t n_max)
{
    const LambdaScalar lam = LambdaScalar::lambda();
    // ((1+t)^λ - 1)/(λt) has constant term 1.
    const Series inner =
        (binomial_power(LambdaScalar(1), lam, n_max + 1) - Series::constant(LambdaScalar(1), n_max + 1)).div_t() *
        lam.inverse();
    const Series log1p = log(binomial_power(LambdaScalar(1), LambdaScalar(1), n_max));
    const XSeries gf = lift(reciprocal(inner)) * exp_x(log1p);
    FamilyTable t = make_table("korobov", n_max, extract_polys(gf, n_max), true);
    require_lambda_polynomial(t);
    return t;
}

LambdaScalar degenerate_falling_at_one(std::size_t n)
{
    LambdaScalar acc(1);
    for (std::size_t k = 0; k < n; ++k)
        acc *= LambdaScalar(1) - lambda_pow(1) * scalar(Rational(static_cast<long>(k)));
    return acc;
}

namespace routes {

std::vector<LambdaScalar> ordered_bell_numbers_stirling(std::size_t n_max)
{
    return higher_order_bell_numbers_stirling(1, n_max);
}

std::vector<LambdaScalar> higher_order_bell_numbers_stirling(int r, std::size_t n_max)
{
    if (r < 1)
        throw InvalidOrder("higher-order ordered Bell needs r ≥ 1");
    std::vector<LambdaScalar> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        Rational acc;
        for (std::size_t m = 0; m <= n; ++m)
            acc += binomial(u(m) + static_cast<unsigned>(r) - 1, u(m)) * factorial(u(m)) * stirling2(i(n), i(m));
        out.emplace_back(acc);
    }
    return out;
}

std::vector<XPoly> bernoulli_polys_operator(std::size_t n_max)
{
    const Series t_over = reciprocal(exp_minus_one(n_max + 1).div_t());
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(operator_apply(t_over, XPoly::monomial(LambdaScalar(1), n)));
    return out;
}

std::vector<LambdaScalar> degenerate_bell_numbers_double_sum(std::size_t n_max)
{
    std::vector<LambdaScalar> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        // collect by powers of λ: coefficient of λ^{n-k}
        std::vector<Rational> coeffs(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            Rational inner;
            for (std::size_t m = 0; m <= k; ++m)
                inner += factorial(u(m)) * stirling2(i(k), i(m));
            coeffs[n - k] += inner * stirling1(i(n), i(k));
        }
        out.emplace_back(RatPoly(std::move(coeffs)));
    }
    return out;
}

std::vector<XPoly> degenerate_bell_polys_triple_sum(std::size_t n_max)
{
    const auto numbers = degenerate_bell_numbers_double_sum(n_max);
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<LambdaScalar> coeffs(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            for (std::size_t m = 0; m <= k; ++m)
                coeffs[m] += scalar(binomial(u(n), u(k)) * stirling1(i(k), i(m))) * lambda_pow(k - m) * numbers[n - k];
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

std::vector<XPoly> degenerate_bell_polys_pairing(std::size_t n_max)
{
    const Series gf = degenerate_bell_gf(n_max);
    const auto falling = degenerate_falling_factorial(n_max).polys;
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        XPoly acc;
        for (std::size_t m = 0; m <= n; ++m) {
            const LambdaScalar pairing = functional_apply(gf, XPoly::monomial(LambdaScalar(1), n - m));
            acc += falling[m] * (scalar(binomial(u(n), u(m))) * pairing);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<XPoly> degenerate_bell_polys_classical(std::size_t n_max)
{
    const auto bell = ordered_bell(n_max).polys;
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        XPoly acc;
        for (std::size_t m = 0; m <= n; ++m)
            acc += bell[m] * (lambda_pow(n - m) * scalar(stirling1(i(n), i(m))));
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<XPoly> degenerate_bell_polys_sheffer(std::size_t n_max)
{
    return sheffer_polys(degenerate_bell_pair(n_max), n_max);
}

std::vector<XPoly> degenerate_falling_stirling(std::size_t n_max)
{
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<LambdaScalar> coeffs(n + 1);
        for (std::size_t m = 0; m <= n; ++m)
            coeffs[m] = lambda_pow(n - m) * scalar(stirling1(i(n), i(m)));
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

std::vector<XPoly> korobov_sheffer(std::size_t n_max)
{
    return sheffer_polys(korobov_pair(n_max), n_max);
}

} // namespace routes

} // namespace umbral
