// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "umbral/lambda_scalar.hpp"
#include "umbral/rat_poly.hpp"
#include "umbral/rational.hpp"
#include "umbral/xpoly.hpp"

#include <string>

namespace umbral {

/// Unicode: "x^2 + (2 - λ)x + (3 - λ)", "13 - 9λ + 2λ²".
/// Ascii:   same with λ spelled "L" and λ powers as "L^2".
/// Latex:   "\lambda^{2}", "x^{2}", "\frac{1}{2}".
enum class Notation { Unicode, Ascii, Latex };

std::string render(const Rational& r, Notation notation = Notation::Unicode);
/// A polynomial in λ, increasing powers.
std::string render_lambda(const RatPoly& p, Notation notation = Notation::Unicode);
std::string render(const LambdaScalar& s, Notation notation = Notation::Unicode);
/// Decreasing powers of x. Coefficients with more than one term are
/// parenthesized, including the constant term.
std::string render(const XPoly& p, Notation notation = Notation::Unicode);

} // namespace umbral
