// SPDX-License-Identifier: Apache-2.0
#include "umbral/identities.hpp"

#include "umbral/errors.hpp"
#include "umbral/sequences.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace umbral {

namespace {

/// Every table an identity side may need, built once per run through order
/// n_max + 1 (the shifted recurrence reaches one order past n).
struct Context {
    std::size_t n_max = 0;
    std::vector<XPoly> dbell;                   // generating-function extraction
    std::vector<LambdaScalar> dbell_numbers;    // Stirling double sum
    std::vector<XPoly> bell;                    // classical ordered Bell polynomials
    std::vector<LambdaScalar> bell_numbers;     // sum m! S2(n,m)
    std::vector<XPoly> bernoulli;               // B_n(x)
    std::vector<LambdaScalar> bernoulli_numbers;
    std::vector<std::vector<Rational>> bernoulli_higher;  // [α][n]
    std::vector<XPoly> korobov;
    std::vector<XPoly> dfalling;                // product definition
};

Context build_context(std::size_t n_max)
{
    const std::size_t m = n_max + 1;
    Context c;
    c.n_max = n_max;
    c.dbell = degenerate_ordered_bell(m).polys;
    c.dbell_numbers = routes::degenerate_bell_numbers_double_sum(m);
    c.bell = ordered_bell(m).polys;
    c.bell_numbers = routes::ordered_bell_numbers_stirling(m);
    auto be = bernoulli_euler(m);
    c.bernoulli = std::move(be.bernoulli.polys);
    c.bernoulli_numbers = std::move(be.bernoulli.numbers);
    c.bernoulli_higher = std::move(be.higher_order);
    c.korobov = korobov(m).polys;
    c.dfalling = degenerate_falling_factorial(m).polys;
    return c;
}

unsigned u(std::size_t v)
{
    return static_cast<unsigned>(v);
}

int si(std::size_t v)
{
    return static_cast<int>(v);
}

LambdaScalar lam(std::size_t e)
{
    return LambdaScalar(RatPoly::monomial(Rational(1), e));
}

LambdaScalar sc(const Rational& r)
{
    return LambdaScalar(r);
}

LambdaScalar binom(std::size_t n, std::size_t k)
{
    return sc(binomial(u(n), u(k)));
}

XPoly xpow(std::size_t k)
{
    return XPoly::monomial(LambdaScalar(1), k);
}

using SideFn = std::function<XPoly(const Context&, std::size_t n, const LambdaScalar& y)>;

struct CheckDef {
    SideFn lhs;
    SideFn rhs;
};

struct VariantDef {
    std::string name;
    std::size_t n_min = 0;
    CheckDef check;
};

struct IdentityDef {
    std::string id;
    std::string routes;
    std::size_t n_min = 0;
    bool free_y = false;
    /// checks[0] is the primary statement; perturbations apply to it.
    std::vector<CheckDef> checks;
    std::vector<VariantDef> variants;
};

// Right side of the increment formula for b_{n,λ}(x+y) - b_{n,λ}(x).
XPoly increment_sum(const Context& c, std::size_t n, const LambdaScalar& y)
{
    XPoly acc;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t m = 1; m <= k; ++m) {
            const LambdaScalar outer = binom(n, k) * lam(k - m) * sc(stirling1(si(k), si(m))) * c.dbell_numbers[n - k] *
                                       sc(Rational(1, static_cast<long>(m + 1)));
            if (outer.is_zero())
                continue;
            for (std::size_t l = 1; l <= m; ++l)
                for (std::size_t j = 1; j <= l; ++j) {
                    const LambdaScalar w = outer * binom(m + 1, l) * binom(l, j - 1) * pow(y, si(l + 1 - j));
                    acc += c.bernoulli[j - 1] * w;
                }
        }
    return acc;
}

XPoly stirling1_power_sum(std::size_t n)
{
    XPoly acc;
    for (std::size_t k = 0; k <= n; ++k)
        acc += xpow(k) * (lam(n - k) * sc(stirling1(si(n), si(k))));
    return acc;
}

std::vector<IdentityDef> build_catalog()
{
    std::vector<IdentityDef> cat;

    cat.push_back({"thm1",
                   "lhs: b_{n,λ}(x) by generating-function extraction, shifted by y; "
                   "rhs: quadruple Stirling/Bernoulli sum with double-sum numbers b_{n,λ}; y sampled at 1..n+2",
                   1,
                   true,
                   {{[](const Context& c, std::size_t n, const LambdaScalar& y) {
                         return c.dbell[n].shift(y) - c.dbell[n];
                     },
                     increment_sum}},
                   {}});

    cat.push_back({"thm2",
                   "lhs: 2b_{n,λ}(x) - b_{n,λ}(x+1) by extraction and shift; rhs: sum λ^{n-k} S1(n,k) x^k",
                   0,
                   false,
                   {{[](const Context& c, std::size_t n, const LambdaScalar&) {
                         return c.dbell[n] * LambdaScalar(2) - c.dbell[n].shift(LambdaScalar(1));
                     },
                     [](const Context&, std::size_t n, const LambdaScalar&) { return stirling1_power_sum(n); }}},
                   {}});

    cat.push_back({"cor3",
                   "lhs: b_{n,λ}(x) by extraction; rhs: Stirling power sum plus the quadruple sum at y = 1",
                   1,
                   false,
                   {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dbell[n]; },
                     [](const Context& c, std::size_t n, const LambdaScalar&) {
                         XPoly acc;
                         for (std::size_t k = 1; k <= n; ++k)
                             acc += xpow(k) * (lam(n - k) * sc(stirling1(si(n), si(k))));
                         return acc + increment_sum(c, n, LambdaScalar(1));
                     }}},
                   {}});

    cat.push_back({"thm4",
                   "lhs: b_{n,λ}(x) by extraction; rhs: sum binom(n,m) λ^{m-k} S1(m,k) b_{n-m,λ} x^k with double-sum numbers",
                   0,
                   false,
                   {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dbell[n]; },
                     [](const Context& c, std::size_t n, const LambdaScalar&) {
                         XPoly acc;
                         for (std::size_t m = 0; m <= n; ++m)
                             for (std::size_t k = 0; k <= m; ++k)
                                 acc += xpow(k) * (binom(n, m) * lam(m - k) * sc(stirling1(si(m), si(k))) *
                                                   c.dbell_numbers[n - m]);
                         return acc;
                     }}},
                   {}});

    // B_l^{(n)} weights shared by the three forms below.
    auto higher_weight = [](const Context& c, std::size_t n, std::size_t l) {
        return lam(l) * binom(n - 1, l) * sc(c.bernoulli_higher[n][l]);
    };
    cat.push_back(
        {"thm5",
         "lhs: b_{n,λ}(x) by extraction; rhs: sum λ^l binom(n-1,l) B_l^{(n)} b_{n-l}(x) with classical b_m(x), "
         "and its expansion in b_m x^{n-l-m} with Stirling-sum numbers b_m",
         1,
         false,
         {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dbell[n]; },
           [higher_weight](const Context& c, std::size_t n, const LambdaScalar&) {
               XPoly acc;
               for (std::size_t l = 0; l < n; ++l)
                   acc += c.bell[n - l] * higher_weight(c, n, l);
               return acc;
           }},
          {[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dbell[n]; },
           [higher_weight](const Context& c, std::size_t n, const LambdaScalar&) {
               XPoly acc;
               for (std::size_t l = 0; l < n; ++l)
                   for (std::size_t m = 0; m <= n - l; ++m)
                       acc += xpow(n - l - m) * (higher_weight(c, n, l) * binom(n - l, m) * c.bell_numbers[m]);
               return acc;
           }}},
         {{"degenerate b_{n-l,λ}(x) in place of b_{n-l}(x)",
           1,
           {[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dbell[n]; },
            [higher_weight](const Context& c, std::size_t n, const LambdaScalar&) {
                XPoly acc;
                for (std::size_t l = 0; l < n; ++l)
                    acc += c.dbell[n - l] * higher_weight(c, n, l);
                return acc;
            }}}}});

    cat.push_back({"cor6",
                   "lhs: b_{n,λ}(x) by extraction; rhs: sum λ^{n-m} S1(n,m) b_m(x) with classical b_m(x)",
                   0,
                   false,
                   {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dbell[n]; },
                     [](const Context& c, std::size_t n, const LambdaScalar&) {
                         XPoly acc;
                         for (std::size_t m = 0; m <= n; ++m)
                             acc += c.bell[m] * (lam(n - m) * sc(stirling1(si(n), si(m))));
                         return acc;
                     }}},
                   {}});

    cat.push_back(
        {"thm7",
         "lhs: b_{n+1,λ}(x) - x b_{n,λ}(x-λ) + b_{n,λ}(x-λ) by extraction and shift; "
         "rhs: 2 sum binom(n,k) binom(m,l) λ^{k-m+l} S1(k,m) b_{n-k,λ} (-1)^l b_{m-l}(x), double-sum numbers",
         0,
         false,
         {{[](const Context& c, std::size_t n, const LambdaScalar&) {
               const XPoly shifted = c.dbell[n].shift(-LambdaScalar::lambda());
               return c.dbell[n + 1] - shifted.mul_x() + shifted;
           },
           [](const Context& c, std::size_t n, const LambdaScalar&) {
               XPoly acc;
               for (std::size_t k = 0; k <= n; ++k)
                   for (std::size_t m = 0; m <= k; ++m)
                       for (std::size_t l = 0; l <= m; ++l) {
                           LambdaScalar w = binom(n, k) * binom(m, l) * lam(k - m + l) *
                                            sc(stirling1(si(k), si(m))) * c.dbell_numbers[n - k];
                           if (l % 2 == 1)
                               w = -w;
                           acc += c.bell[m - l] * w;
                       }
               return acc * LambdaScalar(2);
           }}},
         {}});

    cat.push_back({"thm9",
                   "lhs: B_n(x) by extraction; rhs: expansion in b_{m,λ}(x) with S2 weights, Bernoulli numbers and "
                   "the -n λ^{n-m-1} S2(n-1,m) correction",
                   0,
                   false,
                   {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.bernoulli[n]; },
                     [](const Context& c, std::size_t n, const LambdaScalar&) {
                         XPoly acc;
                         for (std::size_t m = 0; m <= n; ++m) {
                             LambdaScalar a;
                             for (std::size_t k = m; k <= n; ++k)
                                 a += lam(k - m) * sc(stirling2(si(k), si(m))) * binom(n, k) *
                                      c.bernoulli_numbers[n - k];
                             if (n >= 1 && m <= n - 1)
                                 a -= LambdaScalar(static_cast<long>(n)) * lam(n - m - 1) *
                                      sc(stirling2(si(n - 1), si(m)));
                             acc += c.dbell[m] * a;
                         }
                         return acc;
                     }}},
                   {}});

    cat.push_back(
        {"thm10",
         "lhs: (x)_{n,λ} by product; rhs: sum binom(n,m) (2δ_{n,m} - (1)_{n-m,λ}) b_{m,λ}(x), the connection "
         "coefficients ⟨h(f̄)/g(f̄) l(f̄)^m | x^n⟩/m! evaluated in closed form",
         0,
         false,
         {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dfalling[n]; },
           [](const Context& c, std::size_t n, const LambdaScalar&) {
               XPoly acc;
               for (std::size_t m = 0; m <= n; ++m) {
                   LambdaScalar w = -degenerate_falling_at_one(n - m);
                   if (m == n)
                       w += LambdaScalar(2);
                   acc += c.dbell[m] * (binom(n, m) * w);
               }
               return acc;
           }}},
         {{"printed coefficients binom(n,m) b_{n-m,λ}",
           0,
           {[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dfalling[n]; },
            [](const Context& c, std::size_t n, const LambdaScalar&) {
                XPoly acc;
                for (std::size_t m = 0; m <= n; ++m)
                    acc += c.dbell[m] * (binom(n, m) * c.dbell_numbers[n - m]);
                return acc;
            }}}}});

    cat.push_back(
        {"thm11",
         "lhs: K_{n,λ}(x) by extraction; rhs: sum_m C_{n,m} b_{m,λ}(x) with C_{n,m} from the alternating sum of "
         "K_{n,λ}(lλ) - n K_{n-1,λ}(lλ)",
         0,
         false,
         {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.korobov[n]; },
           [](const Context& c, std::size_t n, const LambdaScalar&) {
               XPoly acc;
               const LambdaScalar lambda = LambdaScalar::lambda();
               for (std::size_t m = 0; m <= n; ++m) {
                   LambdaScalar inner;
                   for (std::size_t l = 0; l <= m; ++l) {
                       const LambdaScalar at = lambda * LambdaScalar(static_cast<long>(l));
                       LambdaScalar term = c.korobov[n].evaluate(at);
                       if (n >= 1)
                           term -= LambdaScalar(static_cast<long>(n)) * c.korobov[n - 1].evaluate(at);
                       term *= binom(m, l);
                       if ((m - l) % 2 == 1)
                           term = -term;
                       inner += term;
                   }
                   const LambdaScalar coeff =
                       inner * pow(lambda, -si(m)) * sc(factorial(u(m)).inverse());
                   acc += c.dbell[m] * coeff;
               }
               return acc;
           }}},
         {}});

    cat.push_back({"eq18",
                   "lhs: classical b_n(x) by extraction; rhs: sum λ^{n-m} b_{m,λ}(x) S2(n,m) with degenerate b_{m,λ}(x)",
                   0,
                   false,
                   {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.bell[n]; },
                     [](const Context& c, std::size_t n, const LambdaScalar&) {
                         XPoly acc;
                         for (std::size_t m = 0; m <= n; ++m)
                             acc += c.dbell[m] * (lam(n - m) * sc(stirling2(si(n), si(m))));
                         return acc;
                     }}},
                   {}});

    cat.push_back({"eq43",
                   "lhs: b_{n,λ}(x) by extraction; rhs: triple sum in Bernoulli polynomials B_l(x) with double-sum "
                   "numbers b_{n-k,λ}",
                   0,
                   false,
                   {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dbell[n]; },
                     [](const Context& c, std::size_t n, const LambdaScalar&) {
                         XPoly acc;
                         for (std::size_t k = 0; k <= n; ++k)
                             for (std::size_t m = 0; m <= k; ++m) {
                                 const LambdaScalar outer = lam(k - m) * binom(n, k) * sc(stirling1(si(k), si(m))) *
                                                            c.dbell_numbers[n - k] *
                                                            sc(Rational(1, static_cast<long>(m + 1)));
                                 if (outer.is_zero())
                                     continue;
                                 for (std::size_t l = 0; l <= m; ++l)
                                     acc += c.bernoulli[l] * (outer * binom(m + 1, l));
                             }
                         return acc;
                     }}},
                   {}});

    cat.push_back({"eq61",
                   "lhs: d/dx of b_{n,λ}(x) by extraction; rhs: sum binom(n,l) (-λ)^{n-l-1} (n-l-1)! b_{l,λ}(x)",
                   1,
                   false,
                   {{[](const Context& c, std::size_t n, const LambdaScalar&) { return c.dbell[n].derivative(); },
                     [](const Context& c, std::size_t n, const LambdaScalar&) {
                         XPoly acc;
                         const LambdaScalar minus_lambda = -LambdaScalar::lambda();
                         for (std::size_t l = 0; l < n; ++l)
                             acc += c.dbell[l] * (binom(n, l) * pow(minus_lambda, si(n - l - 1)) *
                                                  sc(factorial(u(n - l - 1))));
                         return acc;
                     }}},
                   {}});

    return cat;
}

const std::vector<IdentityDef>& catalog()
{
    static const std::vector<IdentityDef> cat = build_catalog();
    return cat;
}

const IdentityDef& find(std::string_view id)
{
    const auto& cat = catalog();
    const auto it = std::find_if(cat.begin(), cat.end(), [&](const IdentityDef& d) { return d.id == id; });
    if (it == cat.end())
        throw UnknownIdentity("'" + std::string(id) + "' is not in the catalog");
    return *it;
}

std::optional<IdentityFailure> run_check(const Context& ctx, const IdentityDef& def, const CheckDef& check,
                                         std::size_t n_min, const Perturbation* perturbation)
{
    for (std::size_t n = n_min; n <= ctx.n_max; ++n) {
        std::vector<std::optional<Rational>> ys;
        if (def.free_y) {
            for (const auto& y : y_samples(n))
                ys.emplace_back(y);
        } else {
            ys.emplace_back(std::nullopt);
        }
        for (const auto& y : ys) {
            const LambdaScalar yv = y ? LambdaScalar(*y) : LambdaScalar{};
            XPoly lhs = check.lhs(ctx, n, yv);
            XPoly rhs = check.rhs(ctx, n, yv);
            if (perturbation != nullptr) {
                XPoly& side = perturbation->side == Side::Left ? lhs : rhs;
                if (perturbation->negate)
                    side = -side;
                else
                    side += XPoly::monomial(LambdaScalar(perturbation->amount), perturbation->power);
            }
            XPoly diff = lhs - rhs;
            if (!diff.is_zero())
                return IdentityFailure{n, y, std::move(diff)};
        }
    }
    return std::nullopt;
}

IdentityReport run_identity(const Context& ctx, const IdentityDef& def, const VerifyOptions& options)
{
    IdentityReport report;
    report.id = def.id;
    report.n_max = ctx.n_max;
    report.routes = def.routes;

    const Perturbation* perturbation =
        options.perturbation && options.perturbation->id == def.id ? &*options.perturbation : nullptr;
    for (std::size_t i = 0; i < def.checks.size() && !report.first_failure; ++i)
        report.first_failure = run_check(ctx, def, def.checks[i], def.n_min, i == 0 ? perturbation : nullptr);
    report.pass = !report.first_failure.has_value();

    for (const auto& variant : def.variants) {
        VariantOutcome outcome;
        outcome.name = variant.name;
        outcome.first_failure = run_check(ctx, def, variant.check, variant.n_min, nullptr);
        outcome.holds = !outcome.first_failure.has_value();
        report.variants.push_back(std::move(outcome));
    }
    return report;
}

} // namespace

const std::vector<std::string>& identity_catalog()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& d : catalog())
            v.push_back(d.id);
        return v;
    }();
    return ids;
}

bool is_catalog_identity(std::string_view id)
{
    const auto& ids = identity_catalog();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<Rational> y_samples(std::size_t n)
{
    std::vector<Rational> ys;
    for (std::size_t i = 1; i <= n + 2; ++i)
        ys.emplace_back(static_cast<long>(i));
    return ys;
}

IdentityReport verify_identity(std::string_view id, std::size_t n_max, const VerifyOptions& options)
{
    const IdentityDef& def = find(id);
    const Context ctx = build_context(n_max);
    return run_identity(ctx, def, options);
}

std::vector<IdentityReport> verify_all(std::size_t n_max, const VerifyOptions& options)
{
    const Context ctx = build_context(n_max);
    const auto& cat = catalog();
    std::vector<IdentityReport> reports;
    reports.reserve(cat.size());
    if (!options.concurrent) {
        for (const auto& def : cat)
            reports.push_back(run_identity(ctx, def, options));
        return reports;
    }
    std::vector<std::future<IdentityReport>> jobs;
    jobs.reserve(cat.size());
    for (const auto& def : cat)
        jobs.push_back(std::async(std::launch::async, [&ctx, &def, &options] { return run_identity(ctx, def, options); }));
    for (auto& job : jobs)
        reports.push_back(job.get());
    return reports;
}

} // namespace umbral
