// SPDX-License-Identifier: Apache-2.0
#include "oracles.hpp"

#include "umbral/errors.hpp"
#include "umbral/sequences.hpp"

#include <doctest.h>

#include <vector>

using namespace umbral;
using oracle::lam;
using oracle::lpoly;
using oracle::xpoly;

namespace {

const XPoly X = XPoly::x();

LambdaScalar sc(long v) { return LambdaScalar(v); }
LambdaScalar bin(std::size_t n, std::size_t k)
{
    return LambdaScalar(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
}

XPoly at_lambda(const XPoly& p, long v) { return XPoly::from_rational(p.eval_lambda(Rational(v))); }

} // namespace

TEST_CASE("Stirling numbers")
{
    CHECK(stirling1(3, 3) == Rational(1));
    CHECK(stirling1(3, 1) == Rational(2));
    CHECK(stirling1(3, 2) == Rational(-3));
    CHECK(stirling1(0, 0) == Rational(1));
    CHECK(stirling1(4, 0) == Rational(0));
    CHECK(stirling2(3, 2) == Rational(3));
    CHECK(stirling2(4, 2) == Rational(7));
    CHECK(stirling2(5, 5) == Rational(1));
    CHECK_THROWS_AS(stirling1(2, 3), IndexOutOfRange);
    CHECK_THROWS_AS(stirling2(-1, 0), IndexOutOfRange);
    CHECK_THROWS_AS(stirling2(3, -1), IndexOutOfRange);

    for (int n = 0; n <= 8; ++n) {
        const RatPoly falling = oracle::falling_product(n);
        for (int k = 0; k <= n; ++k) {
            CHECK(stirling1(n, k) == falling.coeff(static_cast<std::size_t>(k)));
            CHECK(stirling2(n, k) == Rational(oracle::count_partitions(n, k)));
        }
    }

    // the two triangles are inverse matrices
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m) {
            Rational s;
            for (int k = m; k <= n; ++k)
                s += stirling1(n, k) * stirling2(k, m);
            CHECK(s == Rational(n == m ? 1 : 0));
        }
}

TEST_CASE("ordered Bell numbers and polynomials")
{
    const FamilyTable t = ordered_bell(8);
    CHECK(t.id == "bell");
    const std::vector<LambdaScalar> first{1, 1, 3, 13, 75, 541};
    for (std::size_t n = 0; n < first.size(); ++n)
        CHECK(t.numbers[n] == first[n]);
    for (int n = 0; n <= 7; ++n)
        CHECK(t.numbers[static_cast<std::size_t>(n)] == sc(oracle::count_ordered_partitions(n)));
    CHECK(routes::ordered_bell_numbers_stirling(8) == t.numbers);
    CHECK(t.polys[1] == X + XPoly(1));
    CHECK(t.polys[2] == X * X + sc(2) * X + XPoly(3));
    const auto oracle_polys = oracle::ordered_bell_polys(8);
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(t.polys[n] == oracle_polys[n]);
        CHECK(t.polys[n].evaluate(0) == t.numbers[n]);
    }
}

TEST_CASE("higher-order ordered Bell numbers")
{
    CHECK(higher_order_ordered_bell(2, 3).numbers[2] == sc(8));
    CHECK(higher_order_ordered_bell(1, 8).polys == ordered_bell(8).polys);
    CHECK(higher_order_ordered_bell(3, 0).numbers[0] == sc(1));
    CHECK_THROWS_AS(higher_order_ordered_bell(0, 3), InvalidOrder);
    CHECK_THROWS_AS(higher_order_ordered_bell(-2, 3), InvalidOrder);

    for (int r = 1; r <= 4; ++r)
        CHECK(higher_order_ordered_bell(r, 8).numbers == routes::higher_order_bell_numbers_stirling(r, 8));

    // order r+1 is the binomial convolution of order r with order 1
    const auto b1 = ordered_bell(8).numbers;
    for (int r = 1; r <= 3; ++r) {
        const auto br = higher_order_ordered_bell(r, 8).numbers;
        const auto next = higher_order_ordered_bell(r + 1, 8).numbers;
        for (std::size_t n = 0; n <= 8; ++n) {
            LambdaScalar s;
            for (std::size_t k = 0; k <= n; ++k)
                s += bin(n, k) * br[k] * b1[n - k];
            CHECK(next[n] == s);
        }
    }
}

TEST_CASE("Bernoulli and Euler")
{
    const auto be = bernoulli_euler(8);
    CHECK(be.bernoulli.numbers[0] == sc(1));
    CHECK(be.bernoulli.numbers[1] == LambdaScalar(Rational(-1, 2)));
    CHECK(be.bernoulli.numbers[2] == LambdaScalar(Rational(1, 6)));
    CHECK(be.euler.polys[1] == X - XPoly(Rational(1, 2)));
    CHECK(be.higher_order[2][2] == Rational(5, 6));
    CHECK(be.higher_order[2][3] == Rational(-1, 2));
    CHECK(be.higher_order[0][0] == Rational(1));
    CHECK(be.higher_order[0][3] == Rational(0));

    const auto bn = oracle::bernoulli_numbers(8);
    const auto ep = oracle::euler_polys(8);
    const auto op = routes::bernoulli_polys_operator(8);
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(be.bernoulli.numbers[n] == LambdaScalar(bn[n]));
        CHECK(be.higher_order[1][n] == bn[n]);
        CHECK(be.bernoulli.polys[n] == oracle::bernoulli_poly(n));
        CHECK(op[n] == be.bernoulli.polys[n]);
        CHECK(be.euler.polys[n] == ep[n]);
    }
}

TEST_CASE("Carlitz degenerate Euler and Bernoulli")
{
    const auto c = carlitz_degenerate(8);
    CHECK(c.euler.polys[0] == XPoly(1));
    CHECK(c.euler.polys[1].evaluate(0) == LambdaScalar(Rational(-1, 2)));
    CHECK(c.bernoulli.polys[0] == XPoly(1));
    const auto be = bernoulli_euler(8);
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(at_lambda(c.euler.polys[n], 0) == be.euler.polys[n]);
        CHECK(at_lambda(c.bernoulli.polys[n], 0) == be.bernoulli.polys[n]);
    }
}

TEST_CASE("degenerate ordered Bell numbers and polynomials")
{
    const FamilyTable t = degenerate_ordered_bell(12);
    CHECK(t.id == "dbell");
    CHECK(t.numbers[0] == sc(1));
    CHECK(t.numbers[1] == sc(1));
    CHECK(t.numbers[2] == lpoly({3, -1}));
    CHECK(t.numbers[3] == lpoly({13, -9, 2}));
    CHECK(t.polys[2] == xpoly({lpoly({3, -1}), lpoly({2, -1}), 1}));

    CHECK(routes::degenerate_bell_numbers_double_sum(12) == t.numbers);
    CHECK(routes::degenerate_bell_polys_triple_sum(12) == t.polys);
    CHECK(routes::degenerate_bell_polys_pairing(12) == t.polys);
    CHECK(routes::degenerate_bell_polys_classical(12) == t.polys);
    CHECK(routes::degenerate_bell_polys_sheffer(12) == t.polys);

    const auto classical = oracle::ordered_bell_polys(12);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(t.polys[n].degree() == static_cast<long>(n));
        CHECK(t.polys[n].is_lambda_polynomial());
        CHECK(at_lambda(t.polys[n], 0) == classical[n]);
    }
}

TEST_CASE("the lambda-dependent Stirling sum collapses to the classical polynomial")
{
    const auto d = degenerate_ordered_bell(10).polys;
    const auto b = ordered_bell(10).polys;
    for (std::size_t n = 0; n <= 10; ++n) {
        XPoly s;
        for (std::size_t m = 0; m <= n; ++m)
            s += d[m] * (pow(lam(), static_cast<int>(n - m)) *
                         LambdaScalar(stirling2(static_cast<int>(n), static_cast<int>(m))));
        CHECK(s.is_lambda_free());
        CHECK(s == b[n]);
    }
}

TEST_CASE("degenerate falling factorials")
{
    const FamilyTable t = degenerate_falling_factorial(8);
    CHECK(t.polys[2] == X * X - lam() * X);
    CHECK(t.polys[3] == pow(X, 3) - sc(3) * lam() * X * X + sc(2) * lam() * lam() * X);
    CHECK(routes::degenerate_falling_stirling(8) == t.polys);
    const auto plain = falling_factorial(8).polys;
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(t.polys[n] == oracle::degenerate_falling_product(n));
        CHECK(at_lambda(t.polys[n], 1) == plain[n]);
        CHECK(plain[n] == XPoly::from_rational(oracle::falling_product(static_cast<int>(n))));
        CHECK(degenerate_falling_at_one(n) == t.polys[n].evaluate(1));
    }
    CHECK(degenerate_falling_at_one(0) == sc(1));
    CHECK(degenerate_falling_at_one(2) == lpoly({1, -1}));
}

TEST_CASE("Korobov polynomials")
{
    const FamilyTable t = korobov(8);
    CHECK(t.polys[0] == XPoly(1));
    CHECK(t.polys[1] == X + XPoly(lpoly({Rational(1, 2), Rational(-1, 2)})));
    CHECK(t.polys[2] == X * X - lam() * X + XPoly(lpoly({Rational(-1, 6), 0, Rational(1, 6)})));
    CHECK(routes::korobov_sheffer(8) == t.polys);

    // λ = 1 is the falling factorial; λ = 0 the Bernoulli polynomials of the second kind
    const auto plain = falling_factorial(8).polys;
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(at_lambda(t.polys[n], 1) == plain[n]);
    CHECK(at_lambda(t.polys[1], 0) == X + XPoly(Rational(1, 2)));
    CHECK(at_lambda(t.polys[2], 0) == X * X - XPoly(Rational(1, 6)));
}
