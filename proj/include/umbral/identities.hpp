// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "umbral/rational.hpp"
#include "umbral/xpoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umbral {

/// Where an identity first broke: the order n, the sampled y (only for
/// identities with a free y) and the nonzero difference lhs - rhs.
struct IdentityFailure {
    std::size_t n = 0;
    std::optional<Rational> y;
    XPoly witness;
};

/// A recorded side check that is run and reported but does not affect status.
struct VariantOutcome {
    std::string name;
    bool holds = false;
    std::optional<IdentityFailure> first_failure;
};

struct IdentityReport {
    std::string id;
    std::size_t n_max = 0;
    bool pass = false;  ///< true iff first_failure is empty
    std::optional<IdentityFailure> first_failure;
    /// Which independent computation builds each side.
    std::string routes;
    std::vector<VariantOutcome> variants;
};

enum class Side { Left, Right };

/// Corrupts one side of one identity at every n: either adds `amount` to its
/// x^power coefficient or, with `negate`, flips its sign. Negative controls.
struct Perturbation {
    std::string id;
    Side side = Side::Left;
    std::size_t power = 0;
    Rational amount{1};
    bool negate = false;
};

struct VerifyOptions {
    std::optional<Perturbation> perturbation;
    /// Run identities on separate threads in verify_all.
    bool concurrent = true;
};

/// Catalog ids in report order.
const std::vector<std::string>& identity_catalog();
bool is_catalog_identity(std::string_view id);

/// y values used for identities with a free variable: 1, 2, ..., n+2.
std::vector<Rational> y_samples(std::size_t n);

/// UnknownIdentity for ids outside the catalog.
IdentityReport verify_identity(std::string_view id, std::size_t n_max, const VerifyOptions& options = {});
std::vector<IdentityReport> verify_all(std::size_t n_max, const VerifyOptions& options = {});

} // namespace umbral
