// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "enveloping.hpp"
#include "identities.hpp"
#include "modules.hpp"
#include "parallel.hpp"
#include "suites.hpp"
#include "twist.hpp"

namespace zhukit {

using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

long parse_long(const std::string& key, const std::string& s) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw PreconditionError("config '" + key + "': expected an integer, got '" + s + "'");
}

// Reads typed values from a config object and rejects keys the command does not know.
class Config {
public:
    Config(const std::string& command, const ordered_json& doc, std::set<std::string> known) : command_(command), doc_(doc) {
        if (!doc.is_object()) throw PreconditionError(command + ": config must be a JSON object");
        for (auto it = doc.begin(); it != doc.end(); ++it)
            if (!known.count(it.key())) throw PreconditionError(command + ": unknown config key '" + it.key() + "'");
    }

    bool has(const std::string& k) const { return doc_.contains(k) && !doc_[k].is_null(); }

    std::string str(const std::string& k, const std::string& def) const {
        if (!has(k)) return def;
        if (!doc_[k].is_string()) throw PreconditionError("config '" + k + "': expected a string");
        return doc_[k].get<std::string>();
    }

    long integer(const std::string& k, long def) const {
        if (!has(k)) return def;
        if (doc_[k].is_number_integer()) return doc_[k].get<long>();
        if (doc_[k].is_string()) return parse_long(k, doc_[k].get<std::string>());
        throw PreconditionError("config '" + k + "': expected an integer");
    }

    bool boolean(const std::string& k, bool def) const {
        if (!has(k)) return def;
        if (!doc_[k].is_boolean()) throw PreconditionError("config '" + k + "': expected true or false");
        return doc_[k].get<bool>();
    }

    std::vector<long> ints(const std::string& k, std::vector<long> def) const {
        if (!has(k)) return def;
        std::vector<long> out;
        const auto& v = doc_[k];
        if (v.is_number_integer()) return {v.get<long>()};
        if (v.is_array()) {
            for (const auto& e : v) {
                if (!e.is_number_integer()) throw PreconditionError("config '" + k + "': expected integers");
                out.push_back(e.get<long>());
            }
        } else if (v.is_string()) {
            for (const auto& part : split(v.get<std::string>(), ',')) {
                auto dots = part.find("..");
                if (dots == std::string::npos) {
                    out.push_back(parse_long(k, part));
                } else {
                    const long lo = parse_long(k, part.substr(0, dots)), hi = parse_long(k, part.substr(dots + 2));
                    if (hi < lo) throw PreconditionError("config '" + k + "': empty range " + part);
                    for (long i = lo; i <= hi; ++i) out.push_back(i);
                }
            }
        } else {
            throw PreconditionError("config '" + k + "': expected a list of integers");
        }
        if (out.empty()) throw PreconditionError("config '" + k + "': empty list");
        return out;
    }

    std::vector<std::string> strings(const std::string& k) const {
        std::vector<std::string> out;
        if (!has(k)) return out;
        const auto& v = doc_[k];
        if (v.is_string()) return split(v.get<std::string>(), ',');
        if (!v.is_array()) throw PreconditionError("config '" + k + "': expected a list");
        for (const auto& e : v) {
            if (!e.is_string()) throw PreconditionError("config '" + k + "': expected strings");
            out.push_back(e.get<std::string>());
        }
        return out;
    }

    const ordered_json& raw(const std::string& k) const { return doc_.at(k); }

private:
    std::string command_;
    const ordered_json& doc_;
};

std::vector<Rational> rationals(const std::string& key, const std::vector<std::string>& parts) {
    std::vector<Rational> out;
    for (const auto& s : parts) {
        try {
            out.push_back(parse_rational(s));
        } catch (const ParseError&) {
            throw PreconditionError("config '" + key + "': expected rationals, got '" + s + "'");
        }
    }
    return out;
}

ordered_json int_array(const std::vector<long>& v) {
    ordered_json a = ordered_json::array();
    for (long x : v) a.push_back(x);
    return a;
}

// zero modes by generator id, then g[-k] h[k] for 1 <= k <= p named A, B, ...
std::vector<std::pair<std::string, std::string>> default_generators(const ModeAlgebra& alg, long p) {
    std::vector<std::pair<std::string, std::string>> out;
    std::set<std::string> used;
    for (const auto& g : alg.spec().generators) used.insert(g.id);
    for (int g = 0; g < alg.num_generators(); ++g) {
        const ModeOp op{0, static_cast<std::uint16_t>(g)};
        if (alg.valid(op)) out.emplace_back(alg.spec().generators[g].id, alg.render(op));
    }
    char next = 'A';
    auto fresh = [&] {
        std::string name;
        for (int round = 0; name.empty(); ++round)
            for (char ch = next; ch <= 'Z'; ++ch) {
                std::string cand = round ? std::string(1, ch) + std::to_string(round) : std::string(1, ch);
                if (!used.count(cand)) {
                    name = cand;
                    next = ch == 'Z' ? 'A' : static_cast<char>(ch + 1);
                    break;
                }
            }
        used.insert(name);
        return name;
    };
    for (long k = 1; k <= p; ++k)
        for (int a = 0; a < alg.num_generators(); ++a)
            for (int b = 0; b < alg.num_generators(); ++b) {
                const ModeOp lo{static_cast<std::int32_t>(-k), static_cast<std::uint16_t>(a)}, hi{static_cast<std::int32_t>(k), static_cast<std::uint16_t>(b)};
                if (alg.valid(lo) && alg.valid(hi)) out.emplace_back(fresh(), alg.render(Word{lo, hi}));
            }
    return out;
}

int budgeted_cutoff(std::size_t gens, long requested, std::size_t budget) {
    long cut = 0;
    std::size_t words = 1, layer = 1;
    while (cut < requested) {
        layer *= gens;
        if (words + layer > budget) break;
        words += layer;
        ++cut;
    }
    return static_cast<int>(cut);
}

Report present(const ordered_json& doc) {
    Config cfg("present", doc, {"algebra", "p", "cutoff", "generators", "ideal", "max_filtration"});
    Report r;
    r.command = "present";
    const std::string src = cfg.str("algebra", "virasoro");
    auto alg = resolve_algebra(src);
    const long p = cfg.integer("p", 0);
    const long cutoff = cfg.integer("cutoff", 4);
    if (p < 0) throw PreconditionError("p must be >= 0");
    if (cutoff < 1) throw PreconditionError("cutoff must be positive");

    std::vector<std::pair<std::string, std::string>> gen_specs;
    if (cfg.has("generators")) {
        const auto& gs = cfg.raw("generators");
        if (!gs.is_array() || gs.empty()) throw PreconditionError("config 'generators': expected a non-empty array");
        for (const auto& g : gs) {
            if (!g.is_object() || !g.contains("name") || !g.contains("word") || !g["name"].is_string() || !g["word"].is_string())
                throw PreconditionError("config 'generators': expected {name, word} objects");
            gen_specs.emplace_back(g["name"].get<std::string>(), g["word"].get<std::string>());
        }
    } else {
        gen_specs = default_generators(*alg, p);
    }

    r.config = {{"algebra", src}, {"p", p}, {"cutoff", cutoff}};
    ordered_json gens_echo = ordered_json::array();
    for (const auto& [n, w] : gen_specs) gens_echo.push_back({{"name", n}, {"word", w}});
    r.config["generators"] = gens_echo;

    Enveloping zp(alg, p);
    std::vector<ZpGenerator> gens;
    ordered_json gen_out = ordered_json::array();
    for (const auto& [name, word] : gen_specs) {
        UEElement v = evaluate(zp, parse_expression(*alg, word));
        if (v.is_zero()) throw PreconditionError("generator " + name + " = " + word + " is zero at level " + std::to_string(p));
        gen_out.push_back({{"name", name}, {"word", word}, {"normal_form", zp.render(v)}});
        gens.push_back(ZpGenerator{name, std::move(v)});
    }

    ordered_json notes = ordered_json::array();
    const int rel_cut = budgeted_cutoff(gens.size(), cutoff, 4000);
    if (rel_cut < cutoff) notes.push_back("relation search limited to words of length " + std::to_string(rel_cut) + " by the word budget");
    const auto basis = zp_basis(*alg, p, static_cast<int>(cutoff));
    const RelationSearch search = find_relations(zp, gens, rel_cut);
    for (const auto& n : search.notes) notes.push_back(n);

    ordered_json rels = ordered_json::array();
    for (const auto& rel : search.relations) rels.push_back(rel.text);
    std::string names;
    for (const auto& g : gens) names += (names.empty() ? "" : ", ") + g.name;
    std::string presentation;
    if (search.relations.empty())
        presentation = gens.size() == 1 ? "free commutative on " + names + " (polynomial ring)" : "free on " + names;
    else
        presentation = "generated by " + names + " subject to " + std::to_string(search.relations.size()) + " relation(s)";

    r.results["p"] = p;
    r.results["cutoff"] = cutoff;
    r.results["basis_size"] = static_cast<long>(basis.size());
    r.results["generators"] = gen_out;
    r.results["relation_word_cutoff"] = rel_cut;
    r.results["words_evaluated"] = static_cast<long>(search.words_evaluated);
    r.results["relations"] = rels;
    r.results["symbolic_elimination"] = search.symbolic;
    r.results["presentation"] = presentation;
    r.results["notes"] = notes;

    if (cfg.has("ideal")) {
        const auto ideal = cfg.strings("ideal");
        const long maxf = cfg.integer("max_filtration", 5);
        if (maxf < 0) throw PreconditionError("max_filtration must be >= 0");
        r.config["ideal"] = ideal;
        r.config["max_filtration"] = maxf;
        Enveloping U(alg);
        std::vector<UEElement> elems;
        for (const auto& e : ideal) elems.push_back(evaluate(U, parse_expression(*alg, e)));
        const QuotientDims q = quotient_dim_sequence(alg, elems, static_cast<int>(maxf));
        r.results["quotient"] = {{"ideal", ideal}, {"dims", int_array(q.dims)}, {"converged", q.converged}, {"slack", q.slack}};
    }
    return r;
}

Report verify(const ordered_json& doc) {
    Config cfg("verify", doc, {"algebra", "suite", "p", "weight_cutoff", "series_order", "hbar", "depth", "module", "module_weight", "jobs", "seed"});
    Report r;
    r.command = "verify";
    const std::string src = cfg.str("algebra", "virasoro");
    auto alg = resolve_algebra(src);
    const bool small = alg->spec().name == "virasoro";
    SuiteOptions opt;
    opt.ps = cfg.ints("p", {0, 1, 2});
    opt.weight_cutoff = cfg.integer("weight_cutoff", small ? 6 : 3);
    opt.series_order = cfg.integer("series_order", 8);
    opt.jobs = static_cast<int>(std::max(1L, cfg.integer("jobs", 1)));
    const std::string hbar = cfg.str("hbar", "sym");
    if (hbar != "sym") {
        try {
            opt.hbar = parse_rational(hbar);
        } catch (const ParseError&) {
            throw PreconditionError("config 'hbar': expected sym or a nonzero rational");
        }
        if (*opt.hbar == 0) throw PreconditionError("config 'hbar': hbar must be nonzero");
    }
    const long depth = cfg.integer("depth", small ? 4 : 2);
    const long module_weight = cfg.integer("module_weight", small ? 4 : 2);
    if (depth < 0 || module_weight < 0) throw PreconditionError("depth and module_weight must be >= 0");

    std::vector<std::string> suites;
    for (const auto& s : split(cfg.str("suite", "all"), ',')) {
        if (s == "all") {
            for (const auto& n : suite_names()) suites.push_back(n);
            suites.push_back("modules");
        } else if (s == "modules" || is_suite(s)) {
            suites.push_back(s);
        } else {
            throw PreconditionError("unknown suite '" + s + "'");
        }
    }
    for (long p : opt.ps)
        if (p < 0) throw PreconditionError("p must be >= 0");
    if (opt.weight_cutoff < 0) throw PreconditionError("weight_cutoff must be >= 0");
    if (opt.series_order < 1) throw PreconditionError("series_order must be positive");

    r.config = {{"algebra", src}, {"suite", cfg.str("suite", "all")}, {"p", int_array(opt.ps)}, {"weight_cutoff", opt.weight_cutoff}, {"series_order", opt.series_order}, {"hbar", hbar}};
    const bool want_modules = std::find(suites.begin(), suites.end(), "modules") != suites.end();
    if (want_modules) {
        r.config["depth"] = depth;
        r.config["module_weight"] = module_weight;
        r.config["module"] = cfg.str("module", "default");
    }
    r.config["seed"] = cfg.integer("seed", 0);

    VertexAlgebra V(alg);
    std::optional<InducedModule> M;
    if (want_modules) {
        ZhuModuleInput n = cfg.has("module") ? load_zhu_module(read_file(cfg.str("module", "")), alg) : default_module(alg);
        M.emplace(alg, n, depth);
        ordered_json dims = int_array(M->dims());
        r.results["module_dims"] = dims;
    }
    for (const auto& s : suites) {
        std::vector<CaseRecord> rs;
        if (s == "modules") {
            ModuleSuiteOptions mo;
            mo.ps = opt.ps;
            mo.state_weight = module_weight;
            mo.jobs = opt.jobs;
            if (small) mo.conformal = 0;
            rs = verify_modules(*M, V, mo);
        } else {
            rs = verify_suite(s, V, opt);
        }
        for (auto& c : rs) r.cases.push_back(std::move(c));
    }
    return r;
}

CaseRecord identity_record(const IdentityCase& c) {
    CaseRecord r;
    r.suite = std::string(identity_name(c.id));
    r.inputs.emplace_back("gamma", c.gamma ? to_string(*c.gamma) : "sym");
    for (const auto& [k, v] : c.params) r.inputs.emplace_back(k, std::to_string(v));
    switch (c.outcome) {
        case Outcome::pass: r.status = CaseStatus::pass; break;
        case Outcome::skipped:
            r.status = CaseStatus::skipped;
            r.defect = c.note;
            break;
        default:
            r.status = CaseStatus::fail;
            r.defect = "lhs = " + c.lhs + ", rhs = " + c.rhs;
    }
    return r;
}

Report identities(const ordered_json& doc) {
    Config cfg("identities", doc, {"suite", "lemma", "gamma", "n", "X", "Y", "p", "j", "alpha", "chi", "gamma_group", "P", "jobs"});
    Report r;
    r.command = "identities";
    std::string suite = cfg.str("suite", cfg.has("lemma") ? "catalog" : "all");
    if (suite != "all" && suite != "catalog" && suite != "appendix-b") throw PreconditionError("unknown identities suite '" + suite + "' (all, catalog, appendix-b)");
    const int jobs = static_cast<int>(std::max(1L, cfg.integer("jobs", 1)));
    r.config = {{"suite", suite}};

    if (suite != "appendix-b") {
        std::vector<IdentityId> ids;
        if (cfg.has("lemma")) {
            ids.push_back(identity_from_name(cfg.str("lemma", "")));
            r.config["lemma"] = std::string(identity_name(ids[0]));
        } else {
            for (auto id : {IdentityId::lemma_A2, IdentityId::sequals, IdentityId::shortlem, IdentityId::geom_q, IdentityId::star_delta, IdentityId::baexp_coeff}) ids.push_back(id);
        }
        std::vector<std::optional<Rational>> gammas;
        if (cfg.has("gamma")) {
            for (const auto& g : cfg.strings("gamma")) {
                if (g == "sym") gammas.emplace_back(std::nullopt);
                else gammas.emplace_back(rationals("gamma", {g}).front());
            }
            r.config["gamma"] = cfg.str("gamma", "");
        }
        std::vector<IdentityCase> cases;
        for (auto id : ids) {
            IdentityGrid g = default_grid(id);
            auto over = [&](const char* key, std::vector<long>& field) {
                if (!cfg.has(key)) return;
                if (field.empty()) {
                    if (ids.size() == 1) throw PreconditionError(std::string("parameter ") + key + " does not apply to " + std::string(identity_name(id)));
                    return;
                }
                field = cfg.ints(key, field);
                r.config[key] = int_array(field);
            };
            over("n", g.n);
            over("X", g.X);
            over("Y", g.Y);
            over("p", g.p);
            over("j", g.j);
            over("alpha", g.alpha);
            over("chi", g.chi);
            if (!gammas.empty()) g.gammas = gammas;
            for (auto& c : expand_grid(g)) cases.push_back(std::move(c));
        }
        std::vector<CaseRecord> recs(cases.size());
        parallel_for(cases.size(), jobs, [&](std::size_t i) {
            try {
                recs[i] = identity_record(check_identity(cases[i]));
            } catch (const ZhukitError& e) {
                recs[i] = identity_record(cases[i]);
                recs[i].status = CaseStatus::error;
                recs[i].defect = e.what();
            }
        });
        for (auto& c : recs) r.cases.push_back(std::move(c));
    }
    if (suite != "catalog") {
        AppendixBOptions ab;
        if (cfg.has("gamma_group")) {
            ab.denominators.clear();
            for (const auto& q : rationals("gamma_group", cfg.strings("gamma_group"))) {
                if (q <= 0 || q.get_num() != 1) throw PreconditionError("config 'gamma_group': expected unit fractions such as 1/2");
                ab.denominators.push_back(q.get_den().get_si());
            }
        }
        if (cfg.has("P")) ab.levels = rationals("P", cfg.strings("P"));
        ordered_json den = ordered_json::array(), lv = ordered_json::array();
        for (long d : ab.denominators) den.push_back("1/" + std::to_string(d));
        for (const auto& P : ab.levels) lv.push_back(to_string(P));
        r.config["gamma_group"] = den;
        r.config["P"] = lv;
        for (auto& c : appendix_b_cases(ab)) r.cases.push_back(std::move(c));
    }
    return r;
}

Report reduce(const ordered_json& doc) {
    Config cfg("reduce", doc, {"algebra", "p", "expression", "membership", "length_cutoff", "mode_window"});
    Report r;
    r.command = "reduce";
    const std::string src = cfg.str("algebra", "virasoro");
    auto alg = resolve_algebra(src);
    const long p = cfg.integer("p", 0);
    if (p < 0) throw PreconditionError("p must be >= 0");
    if (!cfg.has("expression")) throw PreconditionError("reduce needs an expression");
    const std::string text = cfg.str("expression", "");
    const bool membership = cfg.boolean("membership", false);
    r.config = {{"algebra", src}, {"p", p}, {"expression", text}};

    Enveloping U(alg);
    const UEElement x = evaluate(U, parse_expression(*alg, text));
    if (!x.is_zero()) {
        const long d = element_degree(x);
        if (d != 0) throw PreconditionError("expression has degree " + to_string(alg->mode_value_scaled(d)) + "; reduction needs degree 0");
    }
    const UEElement nf = zp_reduce(U, x, p);
    r.results["p"] = p;
    r.results["expression"] = text;
    r.results["pbw_form"] = x.is_zero() ? "0" : U.render(x);
    r.results["normal_form"] = nf.is_zero() ? "0" : U.render(nf);
    if (membership) {
        const long len = cfg.integer("length_cutoff", 4), window = cfg.integer("mode_window", 3);
        r.config["membership"] = true;
        r.config["length_cutoff"] = len;
        r.config["mode_window"] = window;
        const Membership m = ideal_membership(alg, x - nf, p, static_cast<int>(len), window);
        r.results["difference_in_ideal"] = std::string(membership_name(m));
        r.results["membership"] = std::string(membership_name(ideal_membership(alg, x, p, static_cast<int>(len), window)));
    }
    return r;
}

}  // namespace

std::shared_ptr<const ModeAlgebra> resolve_algebra(const std::string& source) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) return std::make_shared<ModeAlgebra>(load_lca_json(read_file(source)));
    return std::make_shared<ModeAlgebra>(preset(source));
}

Report run_command(const std::string& command, const ordered_json& config) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    if (command == "present") r = present(config);
    else if (command == "verify") r = verify(config);
    else if (command == "identities") r = identities(config);
    else if (command == "reduce") r = reduce(config);
    else throw PreconditionError("unknown command '" + command + "' (present, verify, identities, reduce)");
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace zhukit
