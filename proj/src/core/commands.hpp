// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>

#include "json.hpp"
#include "modes.hpp"
#include "report.hpp"

namespace zhukit {

// A preset name ("vir", "virasoro", "sl2", "current_sl2") or a path to an lca/1 file.
std::shared_ptr<const ModeAlgebra> resolve_algebra(const std::string& source);

// Runs one command from a JSON config object. Configuration problems throw (ZhukitError
// subclasses); per-case problems are recorded in the report. Config keys per command:
//   present:    algebra, p, cutoff, generators [{name, word}], ideal [expr], max_filtration
//   verify:     algebra, suite, p [..], weight_cutoff, series_order, hbar, depth, module, module_weight, jobs, seed
//   identities: suite, lemma, gamma, n, X, Y, p, j, alpha, chi, gamma_group, P, jobs
//   reduce:     algebra, p, expression, membership, length_cutoff, mode_window
// Integer lists accept arrays, "0,1,2" or "0..6".
Report run_command(const std::string& command, const nlohmann::ordered_json& config);

}  // namespace zhukit
