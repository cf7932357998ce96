// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace zhukit {

enum class CaseStatus { pass, fail, undecided, error, skipped };

inline const char* status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::undecided: return "undecided";
        case CaseStatus::error: return "error";
        case CaseStatus::skipped: return "skipped";
    }
    return "error";
}

struct CaseRecord {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> inputs;  // kept in insertion order
    CaseStatus status = CaseStatus::pass;
    std::string defect;  // empty on pass; the reason for skipped cases
};

}  // namespace zhukit
