// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scalars.hpp"

namespace zhukit {

enum class IdentityId { lemma_A2, sequals, shortlem, geom_q, star_delta, baexp_coeff };
std::string_view identity_name(IdentityId id);
IdentityId identity_from_name(std::string_view name);

enum class Outcome { pending, pass, fail, skipped };
std::string_view outcome_name(Outcome o);

struct IdentityCase {
    IdentityId id = IdentityId::lemma_A2;
    // "gamma" may hold a rational or be absent for symbolic gamma; all others are integers
    std::optional<Rational> gamma;
    std::vector<std::pair<std::string, long>> params;
    Outcome outcome = Outcome::pending;
    std::string lhs, rhs, note;

    long param(std::string_view name) const;
};

PolyScalar h_sum(const ExponentValue& gamma, long n, long X, long Y);
PolyScalar d_sum(const ExponentValue& gamma, long n, long X, long Y);

IdentityCase check_identity(IdentityCase c);

struct IdentityGrid {
    IdentityId id;
    std::vector<long> n, X, Y, p, j, alpha, chi;
    std::vector<std::optional<Rational>> gammas;  // nullopt = symbolic
};
IdentityGrid default_grid(IdentityId id);
std::vector<IdentityCase> expand_grid(const IdentityGrid& g);

}  // namespace zhukit
