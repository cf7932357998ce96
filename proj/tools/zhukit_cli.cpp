// SPDX-License-Identifier: Apache-2.0
// Command-line front end over the C API.
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zhukit/zhukit.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitConfig = 2;

struct Common {
    std::string format = "text";
    std::string output;
    bool timing = false;
    long jobs = 0;
};

// "--n -4..8" would otherwise be read as an option; glue such values to their flag.
std::vector<std::string> glue_negative_values(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 0; i < argc; ++i) {
        std::string a = argv[i];
        const bool flag = a.size() > 2 && a.rfind("--", 0) == 0 && a.find('=') == std::string::npos;
        if (flag && i + 1 < argc && argv[i + 1][0] == '-' && std::isdigit(static_cast<unsigned char>(argv[i + 1][1]))) {
            out.push_back(a + "=" + argv[i + 1]);
            ++i;
        } else {
            out.push_back(a);
        }
    }
    return out;
}

long default_jobs() {
    if (const char* env = std::getenv("ZHUKIT_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "zhukit: ignoring ZHUKIT_JOBS=" << env << "\n";
    }
    return 1;
}

int report_error(zk_status s, const std::string& expression) {
    std::cerr << "zhukit: " << zk_status_name(s) << " error: " << zk_last_error() << "\n";
    const long pos = zk_last_error_position();
    if (s == ZK_E_PARSE && !expression.empty() && pos >= 0 && pos <= static_cast<long>(expression.size())) {
        std::cerr << "  " << expression << "\n  " << std::string(static_cast<std::size_t>(pos), ' ') << "^\n";
    }
    return kExitConfig;
}

int run(const std::string& command, const ordered_json& config, const Common& c, const std::string& expression = "") {
    zk_report* rep = nullptr;
    zk_status s = zk_run(command.c_str(), config.dump().c_str(), &rep);
    if (s != ZK_OK) return report_error(s, expression);
    char* text = nullptr;
    s = c.format == "json" ? zk_report_json(rep, c.timing, &text) : zk_report_text(rep, c.timing, &text);
    if (s != ZK_OK) {
        zk_report_free(rep);
        return report_error(s, "");
    }
    const int code = zk_report_exit_code(rep);
    if (c.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(c.output, std::ios::binary);
        out << text;
        if (!out) {
            std::cerr << "zhukit: cannot write " << c.output << "\n";
            zk_string_free(text);
            zk_report_free(rep);
            return kExitConfig;
        }
    }
    zk_string_free(text);
    zk_report_free(rep);
    return code;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", c.output, "Write the report to a file instead of stdout");
    sub->add_flag("--timing", c.timing, "Include wall time in the report");
    sub->add_option("--jobs", c.jobs, "Worker threads (default: ZHUKIT_JOBS or 1)")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zhukit: exact computations with Zhu-type algebras of vertex algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(zk_version()));
    Common common;

    std::string algebra = "virasoro";
    long p = 0;

    auto* present = app.add_subcommand("present", "Generators and relations of the level-p quotient");
    long cutoff = 4, max_filtration = 5;
    std::vector<std::string> gens, ideal;
    present->add_option("--algebra", algebra, "Preset name or lca/1 file");
    present->add_option("--p", p, "Level")->check(CLI::NonNegativeNumber);
    present->add_option("--cutoff", cutoff, "Word length cutoff")->check(CLI::PositiveNumber);
    present->add_option("--gen", gens, "Generator as NAME=WORD (repeatable)");
    present->add_option("--ideal", ideal, "Ideal generator in U(g_0) (repeatable); reports quotient dimensions");
    present->add_option("--max-filtration", max_filtration, "Largest filtration degree for --ideal")->check(CLI::NonNegativeNumber);
    add_common(present, common);

    auto* verify = app.add_subcommand("verify", "Run identity suites and module checks");
    std::string suite = "all", plist = "0,1,2", hbar = "sym", module;
    long weight_cutoff = -1, series_order = 8, depth = -1, module_weight = -1, seed = 0;
    verify->add_option("--algebra", algebra, "Preset name or lca/1 file");
    verify->add_option("--suite", suite, "all, modules, or a comma list of suite names");
    verify->add_option("--p", plist, "Levels, e.g. 0,1,2 or 0..2");
    verify->add_option("--weight-cutoff", weight_cutoff, "Largest total input weight (default 6 for virasoro, else 3)");
    verify->add_option("--series-order", series_order, "Number of k values in the modn series");
    verify->add_option("--hbar", hbar, "sym or a nonzero rational");
    verify->add_option("--depth", depth, "Module depth (default 4 for virasoro, else 2)");
    verify->add_option("--module", module, "zhumod/1 file (default: built-in one-dimensional module)");
    verify->add_option("--module-weight", module_weight, "Largest state weight in module checks");
    verify->add_option("--seed", seed, "Recorded in the report");
    add_common(verify, common);

    auto* idents = app.add_subcommand("identities", "Combinatorial identity and grading sweeps");
    std::string isuite, lemma, gamma, gamma_group, levels;
    std::map<std::string, std::string> grid;
    idents->add_option("--suite", isuite, "all, catalog or appendix-b");
    idents->add_option("--lemma", lemma, "A2, sequals, shortlem, q, star-delta, baexp-coeff");
    idents->add_option("--gamma", gamma, "sym and/or rationals, comma separated");
    for (const char* k : {"n", "X", "Y", "p", "j", "alpha", "chi"}) idents->add_option(std::string("--") + k, grid[k], std::string("Grid for ") + k + ", e.g. 0..6 or 1,2");
    idents->add_option("--gamma-group", gamma_group, "Coset groups for appendix-b, e.g. 1/2,1/3");
    idents->add_option("--P", levels, "Levels for appendix-b, e.g. 0,1/2,1");
    add_common(idents, common);

    auto* reduce = app.add_subcommand("reduce", "Normal form of an expression in the level-p quotient");
    std::string expression;
    bool membership = false;
    long length_cutoff = 4, mode_window = 3;
    reduce->add_option("--algebra", algebra, "Preset name or lca/1 file");
    reduce->add_option("--p", p, "Level")->check(CLI::NonNegativeNumber);
    reduce->add_option("expression", expression, "Expression such as \"L[-1] L[1]\"")->required();
    reduce->add_flag("--membership", membership, "Also ask the linear-algebra ideal oracle");
    reduce->add_option("--length-cutoff", length_cutoff, "Oracle word length cutoff");
    reduce->add_option("--mode-window", mode_window, "Oracle mode window");
    add_common(reduce, common);

    auto args = glue_negative_values(argc, argv);
    std::vector<char*> ptrs;
    for (auto& a : args) ptrs.push_back(a.data());
    try {
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    const long jobs = common.jobs > 0 ? common.jobs : default_jobs();

    if (present->parsed()) {
        ordered_json cfg{{"algebra", algebra}, {"p", p}, {"cutoff", cutoff}};
        if (!gens.empty()) {
            ordered_json g = ordered_json::array();
            for (const auto& s : gens) {
                const auto eq = s.find('=');
                if (eq == std::string::npos || eq == 0) {
                    std::cerr << "zhukit: --gen expects NAME=WORD, got '" << s << "'\n";
                    return kExitConfig;
                }
                g.push_back({{"name", s.substr(0, eq)}, {"word", s.substr(eq + 1)}});
            }
            cfg["generators"] = g;
        }
        if (!ideal.empty()) {
            cfg["ideal"] = ideal;
            cfg["max_filtration"] = max_filtration;
        }
        return run("present", cfg, common);
    }
    if (verify->parsed()) {
        ordered_json cfg{{"algebra", algebra}, {"suite", suite}, {"p", plist}, {"series_order", series_order}, {"hbar", hbar}, {"jobs", jobs}, {"seed", seed}};
        if (weight_cutoff >= 0) cfg["weight_cutoff"] = weight_cutoff;
        if (depth >= 0) cfg["depth"] = depth;
        if (module_weight >= 0) cfg["module_weight"] = module_weight;
        if (!module.empty()) cfg["module"] = module;
        return run("verify", cfg, common);
    }
    if (idents->parsed()) {
        ordered_json cfg{{"jobs", jobs}};
        if (!isuite.empty()) cfg["suite"] = isuite;
        if (!lemma.empty()) cfg["lemma"] = lemma;
        if (!gamma.empty()) cfg["gamma"] = gamma;
        for (const auto& [k, v] : grid)
            if (!v.empty()) cfg[k] = v;
        if (!gamma_group.empty()) cfg["gamma_group"] = gamma_group;
        if (!levels.empty()) cfg["P"] = levels;
        return run("identities", cfg, common);
    }
    ordered_json cfg{{"algebra", algebra}, {"p", p}, {"expression", expression}};
    if (membership) {
        cfg["membership"] = true;
        cfg["length_cutoff"] = length_cutoff;
        cfg["mode_window"] = mode_window;
    }
    return run("reduce", cfg, common, expression);
}
