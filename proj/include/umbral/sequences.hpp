// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "umbral/lambda_scalar.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"
#include "umbral/umbral.hpp"
#include "umbral/xpoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace umbral {

/// Signed Stirling numbers of the first kind, (x)_n = sum_l S1(n,l) x^l.
/// IndexOutOfRange unless 0 ≤ k ≤ n.
Rational stirling1(int n, int k);
/// Stirling numbers of the second kind, x^n = sum_l S2(n,l) (x)_l.
Rational stirling2(int n, int k);

/// Entries 0..n_max of one named family. Polynomial families fill `polys`
/// (deg polys[n] = n); number families fill `numbers` (x-free). Families with
/// both a polynomial and a number form fill both, numbers[n] = polys[n](0).
struct FamilyTable {
    std::string id;
    std::size_t n_max = 0;
    std::vector<XPoly> polys;
    std::vector<LambdaScalar> numbers;
};

// Generating-function building blocks, all truncated at `trunc`.

/// e^t - 1.
Series exp_minus_one(std::size_t trunc);
/// (1 + λt)^{1/λ}.
Series degenerate_exp(std::size_t trunc);
/// (1/λ) log(1 + λt), built from its closed-form coefficients (-λ)^{k-1}/k.
Series degenerate_log(std::size_t trunc);
/// (e^{λt} - 1)/λ, coefficients λ^{k-1}/k!.
Series degenerate_exp_minus_one(std::size_t trunc);

/// b_{n,λ}(x) ~ (2 - e^t, (e^{λt} - 1)/λ).
ShefferPair degenerate_bell_pair(std::size_t trunc);
/// (x)_{n,λ} ~ (1, (e^{λt} - 1)/λ).
ShefferPair degenerate_falling_pair(std::size_t trunc);
/// K_{n,λ}(x) ~ ((e^{λt} - 1)/(λ(e^t - 1)), e^t - 1).
ShefferPair korobov_pair(std::size_t trunc);
/// x^n ~ (1, t).
ShefferPair monomial_pair(std::size_t trunc);

/// Ordered Bell (Fubini) numbers b_n and polynomials b_n(x), from 1/(2 - e^t) e^{xt}.
FamilyTable ordered_bell(std::size_t n_max);
/// b_n^{(r)} and b_n^{(r)}(x) from (2 - e^t)^{-r} e^{xt}; InvalidOrder for r < 1.
FamilyTable higher_order_ordered_bell(int r, std::size_t n_max);

struct BernoulliEulerTables {
    FamilyTable bernoulli;  ///< B_n and B_n(x)
    FamilyTable euler;      ///< E_n = E_n(0) and E_n(x)
    /// higher_order[α][n] = B_n^{(α)} for 0 ≤ α, n ≤ n_max.
    std::vector<std::vector<Rational>> higher_order;
};
BernoulliEulerTables bernoulli_euler(std::size_t n_max);

struct CarlitzTables {
    FamilyTable euler;      ///< ℰ_n(x|λ)
    FamilyTable bernoulli;  ///< β_n(x|λ)
};
CarlitzTables carlitz_degenerate(std::size_t n_max);

/// b_{n,λ} and b_{n,λ}(x), extracted from 1/(2 - (1+λt)^{1/λ}) (1+λt)^{x/λ}.
FamilyTable degenerate_ordered_bell(std::size_t n_max);
/// (x)_{n,λ} = x(x-λ)...(x-(n-1)λ).
FamilyTable degenerate_falling_factorial(std::size_t n_max);
/// (x)_n, the λ = 1 specialization.
FamilyTable falling_factorial(std::size_t n_max);
/// Korobov polynomials K_{n,λ}(x); NonPolynomialCoefficient if any coefficient
/// fails to be polynomial in λ.
FamilyTable korobov(std::size_t n_max);

/// (1)_{n,λ} = (1)(1-λ)...(1-(n-1)λ).
LambdaScalar degenerate_falling_at_one(std::size_t n);

/// Independent computation routes, kept separate so tests and the identity
/// harness can compare them against the series extraction.
namespace routes {

/// b_n = sum_m m! S2(n,m).
std::vector<LambdaScalar> ordered_bell_numbers_stirling(std::size_t n_max);
/// b_n^{(r)} = sum_m binom(m+r-1, m) m! S2(n,m).
std::vector<LambdaScalar> higher_order_bell_numbers_stirling(int r, std::size_t n_max);
/// B_n(x) = (t/(e^t - 1)) x^n as an operator.
std::vector<XPoly> bernoulli_polys_operator(std::size_t n_max);

/// b_{n,λ} = sum_k sum_m m! S2(k,m) S1(n,k) λ^{n-k}.
std::vector<LambdaScalar> degenerate_bell_numbers_double_sum(std::size_t n_max);
/// b_{n,λ}(x) = sum_k sum_m binom(n,k) λ^{k-m} S1(k,m) b_{n-k,λ} x^m, numbers from the double sum.
std::vector<XPoly> degenerate_bell_polys_triple_sum(std::size_t n_max);
/// Pairing route: b_{n,λ}(y) = ⟨1/(2-(1+λt)^{1/λ}) | (1+λt)^{y/λ} x^n⟩, expanded as
/// sum_m binom(n,m) (y)_{m,λ} ⟨1/(2-(1+λt)^{1/λ}) | x^{n-m}⟩.
std::vector<XPoly> degenerate_bell_polys_pairing(std::size_t n_max);
/// b_{n,λ}(x) = sum_m λ^{n-m} S1(n,m) b_m(x).
std::vector<XPoly> degenerate_bell_polys_classical(std::size_t n_max);
/// sheffer_polys of degenerate_bell_pair.
std::vector<XPoly> degenerate_bell_polys_sheffer(std::size_t n_max);

/// (x)_{n,λ} = sum_m λ^{n-m} S1(n,m) x^m.
std::vector<XPoly> degenerate_falling_stirling(std::size_t n_max);
/// sheffer_polys of korobov_pair.
std::vector<XPoly> korobov_sheffer(std::size_t n_max);

} // namespace routes

} // namespace umbral
