// SPDX-License-Identifier: Apache-2.0
#include "umbral/errors.hpp"
#include "umbral/identities.hpp"

#include <doctest.h>

#include <string>

using namespace umbral;

namespace {

const VariantOutcome* find_variant(const IdentityReport& r, const std::string& fragment)
{
    for (const auto& v : r.variants)
        if (v.name.find(fragment) != std::string::npos)
            return &v;
    return nullptr;
}

} // namespace

TEST_CASE("catalog contents")
{
    const auto& ids = identity_catalog();
    CHECK(ids == std::vector<std::string>{"thm1", "thm2", "cor3", "thm4", "thm5", "cor6", "thm7", "thm9", "thm10",
                                          "thm11", "eq18", "eq43", "eq61"});
    CHECK(is_catalog_identity("thm9"));
    CHECK_FALSE(is_catalog_identity("thm8"));
    CHECK_FALSE(is_catalog_identity(""));
    CHECK(y_samples(2) == std::vector<Rational>{1, 2, 3, 4});
    CHECK_THROWS_AS(verify_identity("nosuch", 3), UnknownIdentity);
}

TEST_CASE("small orders")
{
    for (const char* id : {"thm2", "thm9", "thm10"}) {
        const IdentityReport r = verify_identity(id, 1);
        CHECK_MESSAGE(r.pass, id);
        CHECK(r.n_max == 1);
        CHECK_FALSE(r.routes.empty());
    }
    CHECK(verify_identity("thm10", 2).pass);
    for (const auto& r : verify_all(0))
        CHECK_MESSAGE(r.pass, r.id);
    for (const auto& r : verify_all(1))
        CHECK_MESSAGE(r.pass, r.id);
}

TEST_CASE("full sweep through order 10, threaded and sequential alike")
{
    const auto threaded = verify_all(10);
    REQUIRE(threaded.size() == 13);
    for (std::size_t i = 0; i < threaded.size(); ++i) {
        CHECK(threaded[i].id == identity_catalog()[i]);
        CHECK_MESSAGE(threaded[i].pass, threaded[i].id);
        CHECK_FALSE(threaded[i].first_failure.has_value());
    }
    VerifyOptions seq;
    seq.concurrent = false;
    const auto sequential = verify_all(6, seq);
    for (const auto& r : sequential)
        CHECK_MESSAGE(r.pass, r.id);
}

TEST_CASE("recorded variants of misprinted statements fail where expected")
{
    const IdentityReport thm5 = verify_identity("thm5", 6);
    CHECK(thm5.pass);
    const VariantOutcome* v5 = nullptr;
    for (const auto& v : thm5.variants)
        if (!v.holds)
            v5 = &v;
    REQUIRE(v5 != nullptr);
    REQUIRE(v5->first_failure.has_value());
    CHECK(v5->first_failure->n == 2);

    const IdentityReport thm10 = verify_identity("thm10", 4);
    CHECK(thm10.pass);
    const VariantOutcome* v10 = find_variant(thm10, "printed");
    REQUIRE(v10 != nullptr);
    CHECK_FALSE(v10->holds);
    REQUIRE(v10->first_failure.has_value());
    CHECK(v10->first_failure->n == 1);
    // lhs x against printed rhs x + 2
    CHECK(v10->first_failure->witness == XPoly(-2));
}

TEST_CASE("negative controls: every side of every identity")
{
    for (const auto& id : identity_catalog())
        for (const Side side : {Side::Left, Side::Right}) {
            VerifyOptions opt;
            opt.perturbation = Perturbation{id, side, 0, Rational(1, 3)};
            const IdentityReport r = verify_identity(id, 4, opt);
            CHECK_MESSAGE(!r.pass, id);
            REQUIRE(r.first_failure.has_value());
            // caught at the identity's lowest order, which is 0 or 1
            CHECK(r.first_failure->n <= 1);
            CHECK(r.first_failure->witness ==
                  XPoly(side == Side::Left ? Rational(1, 3) : Rational(-1, 3)));
        }
}

TEST_CASE("a perturbation hits only its own identity")
{
    VerifyOptions opt;
    opt.perturbation = Perturbation{"thm2", Side::Right, 0, 1, true};
    const auto reports = verify_all(3, opt);
    for (const auto& r : reports) {
        if (r.id == "thm2") {
            CHECK_FALSE(r.pass);
            REQUIRE(r.first_failure.has_value());
            // both sides are 1 at n = 0, so flipping one sign leaves 2
            CHECK(r.first_failure->n == 0);
            CHECK(r.first_failure->witness == XPoly(2));
        } else {
            CHECK_MESSAGE(r.pass, r.id);
        }
    }

    // a high-degree bump surfaces only once the order is reached
    VerifyOptions late;
    late.perturbation = Perturbation{"eq43", Side::Left, 3, 1};
    const IdentityReport r = verify_identity("eq43", 5, late);
    CHECK_FALSE(r.pass);
}

TEST_CASE("identities with a free variable report the sampled value")
{
    VerifyOptions opt;
    opt.perturbation = Perturbation{"thm1", Side::Left, 0, 5};
    const IdentityReport r = verify_identity("thm1", 2, opt);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->y.has_value());
    const IdentityReport plain = verify_identity("thm2", 2, {Perturbation{"thm2", Side::Left, 0, 5}});
    REQUIRE(plain.first_failure.has_value());
    CHECK_FALSE(plain.first_failure->y.has_value());
}
