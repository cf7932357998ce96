// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "records.hpp"

namespace zhukit {

inline constexpr const char* kReportSchema = "report/1";
const char* tool_version();

struct Report {
    std::string command;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<CaseRecord> cases;
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::optional<double> wall_seconds;  // only written when requested; reports are otherwise byte-stable
};

struct Summary {
    long total = 0, pass = 0, fail = 0, undecided = 0, error = 0, skipped = 0;
};

Summary summarize(const std::vector<CaseRecord>& cases);
// 0 when no case failed or errored, 1 otherwise
int exit_code(const Report& r);

nlohmann::ordered_json report_json(const Report& r);
std::string render_json(const Report& r);  // two-space indent, trailing newline
// Human-readable rendering of a report/1 document.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace zhukit
