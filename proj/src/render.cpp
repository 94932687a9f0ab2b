// SPDX-License-Identifier: Apache-2.0
#include "umbral/render.hpp"

#include <utility>
#include <vector>

namespace umbral {

namespace {

std::string superscript(std::size_t k)
{
    static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    const std::string dec = std::to_string(k);
    std::string out;
    for (char c : dec)
        out += digits[c - '0'];
    return out;
}

std::string lambda_power(std::size_t k, Notation notation)
{
    switch (notation) {
    case Notation::Unicode:
        return k == 1 ? "λ" : "λ" + superscript(k);
    case Notation::Ascii:
        return k == 1 ? "L" : "L^" + std::to_string(k);
    case Notation::Latex:
        return k == 1 ? "\\lambda" : "\\lambda^{" + std::to_string(k) + "}";
    }
    return {};
}

std::string x_power(std::size_t k, Notation notation)
{
    if (k == 0)
        return {};
    if (k == 1)
        return "x";
    return notation == Notation::Latex ? "x^{" + std::to_string(k) + "}" : "x^" + std::to_string(k);
}

/// Nonnegative rational.
std::string magnitude(const Rational& r, Notation notation)
{
    if (notation == Notation::Latex && !r.is_integer())
        return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
    return r.to_string();
}

/// |c| times a symbol: "λ²", "9λ", "(1/2)λ"; the bare magnitude when symbol is empty.
std::string scaled(const Rational& abs_c, const std::string& symbol, Notation notation)
{
    if (symbol.empty())
        return magnitude(abs_c, notation);
    if (abs_c.is_one())
        return symbol;
    if (abs_c.is_integer() || notation == Notation::Latex)
        return magnitude(abs_c, notation) + symbol;
    return "(" + magnitude(abs_c, notation) + ")" + symbol;
}

struct Term {
    bool negative = false;
    std::string body;
};

std::string join(const std::vector<Term>& terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" + terms[i].body : terms[i].body;
        else
            out += (terms[i].negative ? " - " : " + ") + terms[i].body;
    }
    return out;
}

std::vector<Term> lambda_terms(const RatPoly& p, Notation notation)
{
    std::vector<Term> terms;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero())
            continue;
        terms.push_back({c[k].sign() < 0, scaled(c[k].abs(), k == 0 ? std::string{} : lambda_power(k, notation), notation)});
    }
    return terms;
}

bool compound(const LambdaScalar& s)
{
    return !s.is_polynomial() || s.num().term_count() > 1;
}

std::string parenthesize(const RatPoly& p, Notation notation)
{
    const std::string body = render_lambda(p, notation);
    return p.term_count() > 1 ? "(" + body + ")" : body;
}

} // namespace

std::string render(const Rational& r, Notation notation)
{
    const std::string body = magnitude(r.abs(), notation);
    return r.sign() < 0 ? "-" + body : body;
}

std::string render_lambda(const RatPoly& p, Notation notation)
{
    return join(lambda_terms(p, notation));
}

std::string render(const LambdaScalar& s, Notation notation)
{
    if (s.is_polynomial())
        return render_lambda(s.num(), notation);
    if (notation == Notation::Latex)
        return "\\frac{" + render_lambda(s.num(), notation) + "}{" + render_lambda(s.den(), notation) + "}";
    return parenthesize(s.num(), notation) + "/" + parenthesize(s.den(), notation);
}

std::string render(const XPoly& p, Notation notation)
{
    std::vector<Term> terms;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        const LambdaScalar& coeff = c[k];
        if (coeff.is_zero())
            continue;
        const std::string xs = x_power(k, notation);
        if (compound(coeff)) {
            const std::string inner = render(coeff, notation);
            terms.push_back({false, notation == Notation::Latex ? "\\left(" + inner + "\\right)" + xs
                                                                  : "(" + inner + ")" + xs});
            continue;
        }
        // single term r·λ^j
        const auto& lc = coeff.num().coefficients();
        const std::size_t j = lc.size() - 1;
        const Rational& r = lc[j];
        const std::string symbol = (j == 0 ? std::string{} : lambda_power(j, notation)) + xs;
        terms.push_back({r.sign() < 0, scaled(r.abs(), symbol, notation)});
    }
    return join(terms);
}

} // namespace umbral
