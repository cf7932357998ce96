// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <cstdio>
#include <map>

namespace zhukit {

using nlohmann::ordered_json;

const char* tool_version() {
#ifdef ZHUKIT_VERSION
    return ZHUKIT_VERSION;
#else
    return "0.0.0";
#endif
}

Summary summarize(const std::vector<CaseRecord>& cases) {
    Summary s;
    for (const auto& c : cases) {
        ++s.total;
        switch (c.status) {
            case CaseStatus::pass: ++s.pass; break;
            case CaseStatus::fail: ++s.fail; break;
            case CaseStatus::undecided: ++s.undecided; break;
            case CaseStatus::error: ++s.error; break;
            case CaseStatus::skipped: ++s.skipped; break;
        }
    }
    return s;
}

int exit_code(const Report& r) {
    const Summary s = summarize(r.cases);
    return s.fail + s.error > 0 ? 1 : 0;
}

ordered_json report_json(const Report& r) {
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["tool"] = {{"name", "zhukit"}, {"version", tool_version()}};
    doc["command"] = r.command;
    doc["config"] = r.config;
    ordered_json cases = ordered_json::array();
    for (const auto& c : r.cases) {
        ordered_json inputs = ordered_json::object();
        for (const auto& [k, v] : c.inputs) inputs[k] = v;
        ordered_json rec{{"suite", c.suite}, {"inputs", inputs}, {"status", status_name(c.status)}};
        if (!c.defect.empty()) rec["defect"] = c.defect;
        cases.push_back(std::move(rec));
    }
    doc["cases"] = std::move(cases);
    doc["results"] = r.results;
    const Summary s = summarize(r.cases);
    doc["summary"] = {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"undecided", s.undecided}, {"error", s.error}, {"skipped", s.skipped}};
    if (r.wall_seconds) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", *r.wall_seconds);
        doc["timing"] = {{"wall_seconds", buf}};
    }
    return doc;
}

std::string render_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

namespace {

std::string scalar_text(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_results(const std::string& command, const ordered_json& res, std::string& out) {
    if (command == "present") {
        out += "level p = " + scalar_text(res.value("p", ordered_json(0))) + ", word cutoff " + scalar_text(res.value("cutoff", ordered_json(0))) + "\n";
        out += "generators:\n";
        for (const auto& g : res.value("generators", ordered_json::array()))
            out += "  " + g.value("name", std::string()) + " = " + g.value("word", std::string()) + "\n";
        const auto rels = res.value("relations", ordered_json::array());
        if (rels.empty()) {
            out += "relations: none\n";
        } else {
            out += "relations:\n";
            for (const auto& r : rels) out += "  " + r.get<std::string>() + " = 0\n";
        }
        out += "presentation: " + res.value("presentation", std::string()) + "\n";
        for (const auto& n : res.value("notes", ordered_json::array())) out += "note: " + n.get<std::string>() + "\n";
        if (res.contains("quotient")) {
            const auto& q = res["quotient"];
            out += "quotient dimensions by filtration:";
            for (const auto& d : q["dims"]) out += " " + scalar_text(d);
            out += q.value("converged", false) ? " (stable)\n" : " (not yet stable)\n";
        }
    } else if (command == "reduce") {
        out += res.value("normal_form", std::string()) + "\n";
        if (res.contains("membership")) out += "in ideal: " + res["membership"].get<std::string>() + "\n";
    } else if (!res.empty()) {
        for (auto it = res.begin(); it != res.end(); ++it) out += it.key() + ": " + it.value().dump() + "\n";
    }
}

}  // namespace

std::string render_text(const ordered_json& doc) {
    std::string out;
    const std::string command = doc.value("command", std::string());
    if (doc.contains("results")) render_results(command, doc["results"], out);
    const auto& cases = doc.contains("cases") ? doc["cases"] : ordered_json::array();
    if (!cases.empty()) {
        std::map<std::string, std::map<std::string, long>> per;
        std::vector<std::string> order;
        for (const auto& c : cases) {
            const std::string s = c.value("suite", std::string());
            if (!per.count(s)) order.push_back(s);
            ++per[s][c.value("status", std::string())];
        }
        for (const auto& s : order) {
            out += s + ":";
            for (const char* st : {"pass", "fail", "undecided", "error", "skipped"})
                if (per[s].count(st)) out += " " + std::string(st) + " " + std::to_string(per[s][st]);
            out += "\n";
        }
        long shown = 0;
        for (const auto& c : cases) {
            const std::string st = c.value("status", std::string());
            if (st == "pass" || st == "skipped") continue;
            if (++shown > 20) {
                out += "  ...\n";
                break;
            }
            out += "  " + st + " " + c.value("suite", std::string());
            for (auto it = c["inputs"].begin(); it != c["inputs"].end(); ++it) out += " " + it.key() + "=" + it.value().get<std::string>();
            out += ": " + c.value("defect", std::string()) + "\n";
        }
    }
    if (doc.contains("summary") && doc["summary"].value("total", 0) > 0) {
        const auto& s = doc["summary"];
        out += "total " + scalar_text(s["total"]) + ", pass " + scalar_text(s["pass"]) + ", fail " + scalar_text(s["fail"]) + ", undecided " +
               scalar_text(s["undecided"]) + ", error " + scalar_text(s["error"]);
        if (s.value("skipped", 0) > 0) out += ", skipped " + scalar_text(s["skipped"]);
        out += "\n";
    }
    if (doc.contains("timing")) out += "wall time " + doc["timing"]["wall_seconds"].get<std::string>() + " s\n";
    return out;
}

}  // namespace zhukit
