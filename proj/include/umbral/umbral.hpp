// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "umbral/series.hpp"
#include "umbral/xpoly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace umbral {

/// A Sheffer pair (g, f): order(g) = 0, order(f) = 1, common truncation.
class ShefferPair {
public:
    /// DomainError when the order conditions fail; TruncationMismatch for
    /// differing truncations.
    ShefferPair(Series g, Series f);

    [[nodiscard]] const Series& g() const noexcept { return g_; }
    [[nodiscard]] const Series& f() const noexcept { return f_; }
    [[nodiscard]] std::size_t trunc() const noexcept { return f_.trunc(); }

private:
    Series g_;
    Series f_;
};

/// Lower-triangular change-of-basis matrix: S_n = sum_m C[n][m] r_m.
class ConnectionMatrix {
public:
    explicit ConnectionMatrix(std::vector<std::vector<LambdaScalar>> rows);

    [[nodiscard]] std::size_t n_max() const noexcept { return rows_.size() - 1; }
    /// Zero above the diagonal.
    [[nodiscard]] LambdaScalar at(std::size_t n, std::size_t m) const;
    [[nodiscard]] const std::vector<LambdaScalar>& row(std::size_t n) const { return rows_.at(n); }

    friend bool operator==(const ConnectionMatrix&, const ConnectionMatrix&) = default;

private:
    std::vector<std::vector<LambdaScalar>> rows_;
};

/// ⟨f(t) | p(x)⟩ = sum_n (n! [t^n]f) p_n, so that ⟨t^k | x^n⟩ = n! δ_{n,k}.
LambdaScalar functional_apply(const Series& f, const XPoly& p);

/// f(t) acting as an operator: t^k p = p^{(k)}.
XPoly operator_apply(const Series& f, const XPoly& p);

/// ((e^{yt} - 1)/t) p(x) = ∫_x^{x+y} p(u) du.
XPoly integral_operator(const XPoly& p, const LambdaScalar& y);

/// S_0..S_{n_max} from the generating function (1/g(f̄(t))) e^{x f̄(t)}.
std::vector<XPoly> sheffer_polys(const ShefferPair& pair, std::size_t n_max);

/// ⟨g f^k | S_n⟩ = n! δ_{n,k} for all 0 ≤ n, k ≤ n_max.
bool sheffer_orthogonality_check(const ShefferPair& pair, std::span<const XPoly> polys, std::size_t n_max);

/// S_{n+1} = (x - g'(t)/g(t)) (1/f'(t)) S_n.
XPoly sheffer_recurrence_step(const ShefferPair& pair, const XPoly& current);

/// Transfer formula q_n = x (f/g)^n x^{-1} p_n, where p_n ~ (1, f) and q_n ~ (1, g).
XPoly transfer_formula(const XPoly& p_n, const Series& f, const Series& g, std::size_t n);

/// C[n][m] = (1/m!) ⟨h(f̄)/g(f̄) l(f̄)^m | x^n⟩ for src ~ (g, f) and dst ~ (h, l).
ConnectionMatrix connection_coeffs(const ShefferPair& src, const ShefferPair& dst, std::size_t n_max);

/// d/dx S_n = sum_{k<n} binom(n,k) ⟨f̄(t) | x^{n-k}⟩ S_k.
XPoly sheffer_derivative(const ShefferPair& pair, std::span<const XPoly> polys, std::size_t n);

/// Coefficients a_m = (1/m!) ⟨g f^m | p⟩ of p in the Sheffer basis of pair.
std::vector<LambdaScalar> basis_expand(const XPoly& p, const ShefferPair& pair);

/// sum_m coeffs[m] basis[m].
XPoly reconstruct(std::span<const LambdaScalar> coeffs, std::span<const XPoly> basis);

} // namespace umbral
