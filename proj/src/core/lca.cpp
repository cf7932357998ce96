// SPDX-License-Identifier: Apache-2.0
#include "lca.hpp"

#include <algorithm>

#include "json.hpp"

namespace zhukit {

using nlohmann::ordered_json;

LcaElement LcaElement::generator(int g, int tpow, PolyScalar coeff) {
    LcaElement e;
    e.add_gen(g, tpow, coeff);
    return e;
}

LcaElement LcaElement::central(int z, PolyScalar coeff) {
    LcaElement e;
    e.add_central(z, coeff);
    return e;
}

void LcaElement::add_gen(int g, int tpow, const PolyScalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = gens_.try_emplace({g, tpow}, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) gens_.erase(it);
    }
}

void LcaElement::add_central(int z, const PolyScalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = centrals_.try_emplace(z, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) centrals_.erase(it);
    }
}

LcaElement& LcaElement::operator+=(const LcaElement& o) {
    for (const auto& [k, v] : o.gens_) add_gen(k.first, k.second, v);
    for (const auto& [z, v] : o.centrals_) add_central(z, v);
    return *this;
}

LcaElement LcaElement::operator*(const PolyScalar& s) const {
    LcaElement r;
    if (s.is_zero()) return r;
    for (const auto& [k, v] : gens_) r.gens_.emplace(k, v * s);
    for (const auto& [z, v] : centrals_) r.centrals_.emplace(z, v * s);
    return r;
}

LcaElement LcaElement::translate(int times) const {
    LcaElement r;
    if (times == 0) return *this;
    for (const auto& [k, v] : gens_) r.gens_.emplace(GenKey{k.first, k.second + times}, v);
    return r;
}

int LcaSpec::generator_index(std::string_view id) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].id == id) return static_cast<int>(i);
    return -1;
}

int LcaSpec::central_index(std::string_view id) const {
    for (std::size_t i = 0; i < centrals.size(); ++i)
        if (centrals[i].id == id) return static_cast<int>(i);
    return -1;
}

const LcaElement* LcaSpec::bracket_entry(int a, int b, int j) const {
    auto it = table.find({a, b});
    if (it == table.end()) return nullptr;
    auto jt = it->second.find(j);
    return jt == it->second.end() ? nullptr : &jt->second;
}

bool LcaSpec::untwisted() const {
    return std::all_of(generators.begin(), generators.end(),
                       [](const Generator& g) { return g.degree.rep() == 0 && is_integer(g.weight); });
}

std::string LcaSpec::render(const LcaElement& e) const {
    std::vector<std::pair<PolyScalar, std::string>> terms;
    for (const auto& [k, v] : e.gens()) {
        std::string body = generators[k.first].id;
        if (k.second == 1) body = "T " + body;
        if (k.second > 1) body = "T^" + std::to_string(k.second) + " " + body;
        terms.emplace_back(v, body);
    }
    for (const auto& [z, v] : e.centrals()) terms.emplace_back(v, centrals[z].id);
    return render_linear(terms);
}

void LcaSpec::validate() const {
    if (generators.empty()) throw SchemaError("algebra '" + name + "' has no generators");
    for (const auto& [pair, entries] : table) {
        const auto& ga = generators.at(pair.first);
        const auto& gb = generators.at(pair.second);
        for (const auto& [j, e] : entries) {
            std::string where = "bracket (" + ga.id + ", " + gb.id + ", " + std::to_string(j) + ")";
            if (j < 0) throw SchemaError(where + ": negative product index");
            Rational w = ga.weight + gb.weight - j - 1;
            for (const auto& [k, v] : e.gens()) {
                const auto& g = generators.at(k.first);
                if (g.weight + k.second != w)
                    throw SchemaError(where + ": term " + g.id + " has weight " + to_string(Rational(g.weight + k.second)) +
                                      ", expected " + to_string(w));
                if (!(g.degree == ga.degree + gb.degree)) throw SchemaError(where + ": degree coset mismatch for " + g.id);
                if (g.odd != (ga.odd != gb.odd)) throw SchemaError(where + ": parity mismatch for " + g.id);
            }
            if (!e.centrals().empty() && w != 0)
                throw SchemaError(where + ": central term in a product of weight " + to_string(w));
        }
    }
}

namespace {

Rational factorial(long n) {
    Rational r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// [u_lambda v] for generators u, v
LambdaPoly generator_bracket(const LcaSpec& spec, int u, int v) {
    LambdaPoly out;
    auto it = spec.table.find({u, v});
    if (it == spec.table.end()) return out;
    for (const auto& [j, e] : it->second) out[j] += e * PolyScalar(Rational(1 / factorial(j)));
    return out;
}

void add_to(LambdaPoly& acc, int power, const LcaElement& e) {
    if (e.is_zero()) return;
    acc[power] += e;
    if (acc[power].is_zero()) acc.erase(power);
}

void add_to(LambdaMuPoly& acc, std::pair<int, int> power, const LcaElement& e) {
    if (e.is_zero()) return;
    acc[power] += e;
    if (acc[power].is_zero()) acc.erase(power);
}

int parity_of(const LcaSpec& spec, const LcaElement& e) {
    int par = -1;
    for (const auto& [k, v] : e.gens()) {
        int pg = spec.generators[k.first].odd ? 1 : 0;
        if (par >= 0 && par != pg) throw PreconditionError("element is not parity-homogeneous");
        par = pg;
    }
    return par < 0 ? 0 : par;
}

LambdaPoly shifted(const LcaSpec& spec, const LambdaPoly& p) {
    // X(lambda) -> X(-lambda - T)
    (void)spec;
    LambdaPoly out;
    for (const auto& [j, x] : p)
        for (int r = 0; r <= j; ++r)
            add_to(out, j - r, x.translate(r) * PolyScalar(Rational(binom_z(j, r) * ((j % 2 == 0) ? 1 : -1))));
    return out;
}

}  // namespace

LambdaPoly lambda_bracket(const LcaSpec& spec, const LcaElement& a, const LcaElement& b) {
    LambdaPoly out;
    for (const auto& [ka, ca] : a.gens()) {
        for (const auto& [kb, cb] : b.gens()) {
            LambdaPoly base = generator_bracket(spec, ka.first, kb.first);
            if (base.empty()) continue;
            const int s = ka.second, t = kb.second;
            PolyScalar coeff = ca * cb * PolyScalar(s % 2 == 0 ? 1 : -1);
            // (-lambda)^s (T + lambda)^t [u_lambda v]
            for (const auto& [j, x] : base)
                for (int r = 0; r <= t; ++r)
                    add_to(out, j + s + (t - r), x.translate(r) * (coeff * PolyScalar(binom_z(t, r))));
        }
    }
    return out;
}

std::string render_lambda(const LcaSpec& spec, const LambdaPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [j, x] : p) {
        if (!s.empty()) s += " + ";
        std::string lam = j == 0 ? "" : (j == 1 ? "lambda*" : "lambda^" + std::to_string(j) + "*");
        s += lam + "(" + spec.render(x) + ")";
    }
    return s;
}

namespace {

LambdaMuPoly jacobi_defect(const LcaSpec& spec, const LcaElement& a, const LcaElement& b, const LcaElement& c) {
    LambdaMuPoly defect;
    // [a_lambda [b_mu c]]
    for (const auto& [j, y] : lambda_bracket(spec, b, c))
        for (const auto& [i, z] : lambda_bracket(spec, a, y)) add_to(defect, {i, j}, z);
    // - [[a_lambda b]_{lambda+mu} c]
    for (const auto& [i, x] : lambda_bracket(spec, a, b))
        for (const auto& [j, w] : lambda_bracket(spec, x, c))
            for (int r = 0; r <= j; ++r) add_to(defect, {i + r, j - r}, w * PolyScalar(Rational(-binom_z(j, r))));
    // - p(a,b) [b_mu [a_lambda c]]
    int pab = (parity_of(spec, a) && parity_of(spec, b)) ? -1 : 1;
    for (const auto& [i, v] : lambda_bracket(spec, a, c))
        for (const auto& [j, u] : lambda_bracket(spec, b, v)) add_to(defect, {i, j}, u * PolyScalar(-pab));
    return defect;
}

LambdaPoly skew_defect(const LcaSpec& spec, const LcaElement& a, const LcaElement& b) {
    // [b_lambda a] + p(a,b) [a_{-lambda-T} b]
    LambdaPoly defect = lambda_bracket(spec, b, a);
    int pab = (parity_of(spec, a) && parity_of(spec, b)) ? -1 : 1;
    for (const auto& [j, x] : shifted(spec, lambda_bracket(spec, a, b))) add_to(defect, j, x * PolyScalar(pab));
    return defect;
}

std::string render_lambda_mu(const LcaSpec& spec, const LambdaMuPoly& p) {
    std::string s;
    for (const auto& [ij, x] : p) {
        if (!s.empty()) s += " + ";
        s += "lambda^" + std::to_string(ij.first) + "*mu^" + std::to_string(ij.second) + "*(" + spec.render(x) + ")";
    }
    return s;
}

std::string element_name(const LcaSpec& spec, const LcaElement& e) { return spec.render(e); }

}  // namespace

AxiomReport check_axioms(const LcaSpec& spec) {
    AxiomReport rep;
    try {
        spec.validate();
    } catch (const SchemaError& e) {
        rep.defects.push_back({"bookkeeping", {}, e.what()});
    }
    const int n = static_cast<int>(spec.generators.size());
    std::vector<LcaElement> elems;
    for (int g = 0; g < n; ++g) elems.push_back(LcaElement::generator(g));
    std::vector<LcaElement> with_t = elems;
    for (int g = 0; g < n; ++g) with_t.push_back(LcaElement::generator(g, 1));

    // skew-commutativity, on T-derivatives too so that both sesquilinearity rules are exercised against each other
    for (const auto& a : with_t)
        for (const auto& b : with_t) {
            ++rep.checked;
            auto d = skew_defect(spec, a, b);
            if (!d.empty()) rep.defects.push_back({"skew", {element_name(spec, a), element_name(spec, b)}, render_lambda(spec, d)});
        }
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) {
                ++rep.checked;
                auto d = jacobi_defect(spec, a, b, c);
                if (!d.empty())
                    rep.defects.push_back(
                        {"jacobi", {element_name(spec, a), element_name(spec, b), element_name(spec, c)}, render_lambda_mu(spec, d)});
            }
    return rep;
}

LcaSpec complete_by_skew(LcaSpec spec) {
    const int n = static_cast<int>(spec.generators.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            auto it = spec.table.find({a, b});
            if (it == spec.table.end() || spec.table.count({b, a})) continue;
            // [b_lambda a] = -p(a,b) [a_{-lambda-T} b]
            LambdaPoly mirror = shifted(spec, generator_bracket(spec, a, b));
            std::map<int, LcaElement> entries;
            for (const auto& [j, x] : mirror) {
                LcaElement e = x * PolyScalar(Rational(-spec.parity_sign(a, b) * factorial(j)));
                if (!e.is_zero()) entries.emplace(j, e);
            }
            spec.table[{b, a}] = entries;
        }
    return spec;
}

LcaSpec skew_table(const LcaSpec& spec) {
    LcaSpec out = spec;
    out.table.clear();
    for (const auto& [pair, entries] : spec.table) {
        (void)entries;
        auto [a, b] = pair;
        LambdaPoly mirror = shifted(spec, generator_bracket(spec, a, b));
        std::map<int, LcaElement> e;
        for (const auto& [j, x] : mirror) {
            LcaElement v = x * PolyScalar(Rational(-spec.parity_sign(a, b) * factorial(j)));
            if (!v.is_zero()) e.emplace(j, v);
        }
        if (!e.empty()) out.table[{b, a}] = e;
    }
    return out;
}

LcaSpec preset(std::string_view name) {
    LcaSpec s;
    if (name == "virasoro" || name == "vir") {
        s.name = "virasoro";
        s.generators = {{"L", 2, false, CosetZ()}};
        s.centrals = {{"C", PolyScalar::symbol(Symbol::c)}};
        auto& t = s.table[{0, 0}];
        t[0] = LcaElement::generator(0, 1);
        t[1] = LcaElement::generator(0, 0, 2);
        t[3] = LcaElement::central(0, PolyScalar(Rational(1, 2)));
    } else if (name == "current_sl2" || name == "sl2" || name == "cur_sl2") {
        s.name = "current_sl2";
        s.generators = {{"e", 1, false, CosetZ()}, {"h", 1, false, CosetZ()}, {"f", 1, false, CosetZ()}};
        s.centrals = {{"K", PolyScalar::symbol(Symbol::k)}};
        const int e = 0, h = 1, f = 2;
        // a_(0) b = [a, b], a_(1) b = (a, b) K with (e, f) = 1, (h, h) = 2
        s.table[{e, f}][0] = LcaElement::generator(h);
        s.table[{e, f}][1] = LcaElement::central(0);
        s.table[{h, e}][0] = LcaElement::generator(e, 0, 2);
        s.table[{h, f}][0] = LcaElement::generator(f, 0, -2);
        s.table[{h, h}][1] = LcaElement::central(0, 2);
        s.table[{f, e}][0] = LcaElement::generator(h, 0, -1);
        s.table[{f, e}][1] = LcaElement::central(0);
        s.table[{e, h}][0] = LcaElement::generator(e, 0, -2);
        s.table[{f, h}][0] = LcaElement::generator(f, 0, 2);
    } else {
        throw PreconditionError("unknown preset '" + std::string(name) + "' (known: virasoro, current_sl2)");
    }
    s.validate();
    return s;
}

namespace {

[[noreturn]] void schema_fail(const std::string& field, const std::string& what) {
    throw SchemaError("lca/1: field '" + field + "': " + what);
}

const ordered_json& need(const ordered_json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) schema_fail(path + "." + key, "missing");
    return obj.at(key);
}

Rational rational_field(const ordered_json& v, const std::string& path) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const ParseError& e) {
        schema_fail(path, e.what());
    }
    schema_fail(path, "expected an exact rational string");
}

PolyScalar scalar_field(const ordered_json& v, const std::string& path) {
    try {
        if (v.is_string()) return PolyScalar::parse(v.get<std::string>());
        if (v.is_number_integer()) return PolyScalar(v.get<long>());
    } catch (const ParseError& e) {
        schema_fail(path, e.what());
    }
    schema_fail(path, "expected a scalar string");
}

std::string line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
    return "line " + std::to_string(line);
}

}  // namespace

LcaSpec load_lca_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("lca/1: " + line_of(text, e.byte) + ": " + e.what(), e.byte);
    }
    if (!doc.is_object()) schema_fail("$", "expected an object");
    if (need(doc, "format", "$") != "lca/1") schema_fail("$.format", "expected \"lca/1\"");
    LcaSpec s;
    s.name = doc.value("name", std::string("custom"));
    const auto& gens = need(doc, "generators", "$");
    if (!gens.is_array() || gens.empty()) schema_fail("$.generators", "expected a non-empty array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string path = "$.generators[" + std::to_string(i) + "]";
        const auto& g = gens[i];
        Generator gen;
        const auto& id = need(g, "id", path);
        if (!id.is_string() || id.get<std::string>().empty()) schema_fail(path + ".id", "expected a name");
        gen.id = id.get<std::string>();
        if (s.generator_index(gen.id) >= 0) schema_fail(path + ".id", "duplicate generator " + gen.id);
        gen.weight = rational_field(need(g, "weight", path), path + ".weight");
        std::string parity = g.value("parity", std::string("even"));
        if (parity != "even" && parity != "odd") schema_fail(path + ".parity", "expected even or odd");
        gen.odd = parity == "odd";
        gen.degree = CosetZ(g.contains("degree") ? rational_field(g.at("degree"), path + ".degree") : Rational(0));
        s.generators.push_back(gen);
    }
    if (doc.contains("centrals")) {
        const auto& cs = doc.at("centrals");
        if (!cs.is_array()) schema_fail("$.centrals", "expected an array");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            std::string path = "$.centrals[" + std::to_string(i) + "]";
            Central z;
            const auto& id = need(cs[i], "id", path);
            if (!id.is_string()) schema_fail(path + ".id", "expected a name");
            z.id = id.get<std::string>();
            if (s.central_index(z.id) >= 0 || s.generator_index(z.id) >= 0) schema_fail(path + ".id", "duplicate name " + z.id);
            z.value = scalar_field(need(cs[i], "value", path), path + ".value");
            s.centrals.push_back(z);
        }
    }
    const auto& br = need(doc, "brackets", "$");
    if (!br.is_object()) schema_fail("$.brackets", "expected an object");
    for (const auto& [an, inner] : br.items()) {
        int a = s.generator_index(an);
        if (a < 0) schema_fail("$.brackets." + an, "unknown generator");
        if (!inner.is_object()) schema_fail("$.brackets." + an, "expected an object");
        for (const auto& [bn, byj] : inner.items()) {
            int b = s.generator_index(bn);
            std::string path = "$.brackets." + an + "." + bn;
            if (b < 0) schema_fail(path, "unknown generator");
            if (!byj.is_object()) schema_fail(path, "expected an object keyed by product index");
            for (const auto& [js, terms] : byj.items()) {
                std::string jpath = path + "." + js;
                long j;
                try {
                    std::size_t used = 0;
                    j = std::stol(js, &used);
                    if (used != js.size() || j < 0) throw std::invalid_argument(js);
                } catch (const std::exception&) {
                    schema_fail(jpath, "product index must be a non-negative integer");
                }
                if (!terms.is_array()) schema_fail(jpath, "expected an array of terms");
                LcaElement e;
                for (std::size_t t = 0; t < terms.size(); ++t) {
                    std::string tpath = jpath + "[" + std::to_string(t) + "]";
                    const auto& term = terms[t];
                    PolyScalar coeff = term.contains("coeff") ? scalar_field(term.at("coeff"), tpath + ".coeff") : PolyScalar(1);
                    if (term.contains("gen")) {
                        int g = s.generator_index(term.at("gen").get<std::string>());
                        if (g < 0) schema_fail(tpath + ".gen", "unknown generator");
                        long tp = term.value("T", 0L);
                        if (tp < 0) schema_fail(tpath + ".T", "T power must be >= 0");
                        e.add_gen(g, static_cast<int>(tp), coeff);
                    } else if (term.contains("central")) {
                        int z = s.central_index(term.at("central").get<std::string>());
                        if (z < 0) schema_fail(tpath + ".central", "unknown central");
                        if (term.value("T", 0L) != 0) schema_fail(tpath + ".T", "T annihilates central elements");
                        e.add_central(z, coeff);
                    } else {
                        schema_fail(tpath, "term needs 'gen' or 'central'");
                    }
                }
                if (!e.is_zero()) s.table[{a, b}][static_cast<int>(j)] += e;
            }
        }
    }
    s.validate();
    return s;
}

std::string dump_lca_json(const LcaSpec& s) {
    ordered_json doc;
    doc["format"] = "lca/1";
    doc["name"] = s.name;
    doc["generators"] = ordered_json::array();
    for (const auto& g : s.generators)
        doc["generators"].push_back(
            {{"id", g.id}, {"weight", to_string(g.weight)}, {"parity", g.odd ? "odd" : "even"}, {"degree", to_string(g.degree.rep())}});
    doc["centrals"] = ordered_json::array();
    for (const auto& z : s.centrals) doc["centrals"].push_back({{"id", z.id}, {"value", z.value.str()}});
    ordered_json br = ordered_json::object();
    for (const auto& [pair, entries] : s.table) {
        for (const auto& [j, e] : entries) {
            ordered_json terms = ordered_json::array();
            for (const auto& [k, v] : e.gens()) terms.push_back({{"gen", s.generators[k.first].id}, {"T", k.second}, {"coeff", v.str()}});
            for (const auto& [z, v] : e.centrals()) terms.push_back({{"central", s.centrals[z].id}, {"coeff", v.str()}});
            br[s.generators[pair.first].id][s.generators[pair.second].id][std::to_string(j)] = terms;
        }
    }
    doc["brackets"] = br;
    return doc.dump(2);
}

}  // namespace zhukit
