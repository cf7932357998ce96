// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "records.hpp"
#include "vertex.hpp"

namespace zhukit {

struct SuiteOptions {
    std::vector<long> ps{0, 1, 2};
    long weight_cutoff = 6;
    long series_order = 8;
    // nullopt: explicit identities keep hbar symbolic and mod-J suites use hbar_values
    std::optional<Rational> hbar;
    std::vector<Rational> hbar_values{Rational(1), Rational(2)};
    int jobs = 1;
};

const std::vector<std::string>& suite_names();  // "unit", "tind", ... in run order
bool is_suite(const std::string& id);

// Runs one identity suite over homogeneous basis states within the weight cutoff.
// Inputs are pairs/triples whose weights sum to at most the cutoff; defects may lie higher
// and J spans are built up to the largest defect weight a suite can produce.
std::vector<CaseRecord> verify_suite(const std::string& id, const VertexAlgebra& v, const SuiteOptions& opt);

}  // namespace zhukit
