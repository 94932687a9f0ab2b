// SPDX-License-Identifier: Apache-2.0
#include "umbral/umbral.hpp"

#include <string>

namespace umbral {

namespace {

void require_degree(const XPoly& p, std::size_t trunc, const char* what)
{
    if (p.degree() > static_cast<long>(trunc))
        throw TruncationTooLow(std::string(what) + ": degree " + std::to_string(p.degree()) +
                               " exceeds truncation " + std::to_string(trunc));
}

LambdaScalar inv_factorial(std::size_t m)
{
    return LambdaScalar(factorial(static_cast<unsigned>(m)).inverse());
}

} // namespace

ShefferPair::ShefferPair(Series g, Series f) : g_(std::move(g)), f_(std::move(f))
{
    if (g_.trunc() != f_.trunc())
        throw TruncationMismatch("Sheffer pair with different truncations");
    if (g_.order() != std::optional<std::size_t>(0))
        throw DomainError("Sheffer pair needs order(g) = 0");
    if (f_.order() != std::optional<std::size_t>(1))
        throw DomainError("Sheffer pair needs order(f) = 1");
}

ConnectionMatrix::ConnectionMatrix(std::vector<std::vector<LambdaScalar>> rows) : rows_(std::move(rows))
{
    if (rows_.empty())
        throw DomainError("empty connection matrix");
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1)
            throw DomainError("connection matrix row " + std::to_string(n) + " has wrong length");
        if (rows_[n][n].is_zero())
            throw DomainError("connection matrix has a zero diagonal entry at " + std::to_string(n));
    }
}

LambdaScalar ConnectionMatrix::at(std::size_t n, std::size_t m) const
{
    const auto& r = rows_.at(n);
    return m < r.size() ? r[m] : LambdaScalar{};
}

LambdaScalar functional_apply(const Series& f, const XPoly& p)
{
    require_degree(p, f.trunc(), "functional_apply");
    LambdaScalar acc;
    for (std::size_t n = 0; n < p.coefficients().size(); ++n) {
        const auto& pn = p.coefficients()[n];
        if (!pn.is_zero() && !f[n].is_zero())
            acc += f.egf_coeff(n) * pn;
    }
    return acc;
}

XPoly operator_apply(const Series& f, const XPoly& p)
{
    require_degree(p, f.trunc(), "operator_apply");
    XPoly acc;
    XPoly deriv = p;
    for (std::size_t k = 0; !deriv.is_zero(); ++k) {
        if (!f[k].is_zero())
            acc += deriv * f[k];
        deriv = deriv.derivative();
    }
    return acc;
}

XPoly integral_operator(const XPoly& p, const LambdaScalar& y)
{
    const XPoly anti = p.antiderivative();
    return anti.shift(y) - anti;
}

std::vector<XPoly> sheffer_polys(const ShefferPair& pair, std::size_t n_max)
{
    if (n_max > pair.trunc())
        throw TruncationTooLow("sheffer_polys: n_max exceeds truncation");
    const Series fbar = comp_inverse(pair.f());
    const Series prefactor = reciprocal(compose(pair.g(), fbar));
    const XSeries gf = lift(prefactor) * exp_x(fbar);
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(gf.egf_coeff(n));
    return out;
}

bool sheffer_orthogonality_check(const ShefferPair& pair, std::span<const XPoly> polys, std::size_t n_max)
{
    if (n_max > pair.trunc() || polys.size() <= n_max)
        throw TruncationTooLow("sheffer_orthogonality_check: not enough data for n_max");
    Series weight = pair.g();
    for (std::size_t k = 0; k <= n_max; ++k) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            const LambdaScalar expected =
                n == k ? LambdaScalar(factorial(static_cast<unsigned>(n))) : LambdaScalar{};
            if (functional_apply(weight, polys[n]) != expected)
                return false;
        }
        weight = weight * pair.f();
    }
    return true;
}

XPoly sheffer_recurrence_step(const ShefferPair& pair, const XPoly& current)
{
    const std::size_t n = pair.trunc();
    if (n == 0)
        throw TruncationTooLow("sheffer_recurrence_step: truncation 0");
    const Series inv_fprime = reciprocal(pair.f().derivative());
    const Series log_deriv = pair.g().derivative() * reciprocal(pair.g().truncated(n - 1));
    const XPoly shifted = operator_apply(inv_fprime, current);
    return shifted.mul_x() - operator_apply(log_deriv, shifted);
}

XPoly transfer_formula(const XPoly& p_n, const Series& f, const Series& g, std::size_t n)
{
    if (f.order() != std::optional<std::size_t>(1) || g.order() != std::optional<std::size_t>(1))
        throw DomainError("transfer_formula needs order(f) = order(g) = 1");
    const Series ratio = f.div_t() * reciprocal(g.div_t());
    return operator_apply(pow(ratio, static_cast<unsigned>(n)), p_n.div_x()).mul_x();
}

ConnectionMatrix connection_coeffs(const ShefferPair& src, const ShefferPair& dst, std::size_t n_max)
{
    if (src.trunc() != dst.trunc())
        throw TruncationMismatch("connection_coeffs: pairs with different truncations");
    if (n_max > src.trunc())
        throw TruncationTooLow("connection_coeffs: n_max exceeds truncation");
    const Series fbar = comp_inverse(src.f());
    const Series ratio = compose(dst.g(), fbar) * reciprocal(compose(src.g(), fbar));
    const Series l_of_fbar = compose(dst.f(), fbar);

    std::vector<std::vector<LambdaScalar>> rows(n_max + 1);
    Series weight = ratio;
    for (std::size_t m = 0; m <= n_max; ++m) {
        const LambdaScalar scale = inv_factorial(m);
        for (std::size_t n = m; n <= n_max; ++n) {
            // ⟨weight | x^n⟩ = n! [t^n] weight
            rows[n].resize(n + 1);
            rows[n][m] = weight.egf_coeff(n) * scale;
        }
        weight = weight * l_of_fbar;
    }
    return ConnectionMatrix(std::move(rows));
}

XPoly sheffer_derivative(const ShefferPair& pair, std::span<const XPoly> polys, std::size_t n)
{
    if (n == 0)
        throw DomainError("sheffer_derivative needs n ≥ 1");
    if (polys.size() < n)
        throw TruncationTooLow("sheffer_derivative: need S_0..S_{n-1}");
    if (n > pair.trunc())
        throw TruncationTooLow("sheffer_derivative: n exceeds truncation");
    const Series fbar = comp_inverse(pair.f());
    XPoly acc;
    for (std::size_t k = 0; k < n; ++k) {
        const LambdaScalar pairing = fbar.egf_coeff(n - k);
        if (!pairing.is_zero())
            acc += polys[k] * (LambdaScalar(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * pairing);
    }
    return acc;
}

std::vector<LambdaScalar> basis_expand(const XPoly& p, const ShefferPair& pair)
{
    require_degree(p, pair.trunc(), "basis_expand");
    if (p.is_zero())
        return {};
    const auto deg = static_cast<std::size_t>(p.degree());
    std::vector<LambdaScalar> out;
    out.reserve(deg + 1);
    Series weight = pair.g();
    for (std::size_t m = 0; m <= deg; ++m) {
        out.push_back(functional_apply(weight, p) * inv_factorial(m));
        weight = weight * pair.f();
    }
    return out;
}

XPoly reconstruct(std::span<const LambdaScalar> coeffs, std::span<const XPoly> basis)
{
    if (coeffs.size() > basis.size())
        throw IndexOutOfRange("reconstruct: more coefficients than basis polynomials");
    XPoly acc;
    for (std::size_t m = 0; m < coeffs.size(); ++m)
        if (!coeffs[m].is_zero())
            acc += basis[m] * coeffs[m];
    return acc;
}

} // namespace umbral
