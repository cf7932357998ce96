// SPDX-License-Identifier: Apache-2.0
#include "modules.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "json.hpp"
#include "parallel.hpp"

namespace zhukit {

namespace {

using nlohmann::ordered_json;

Matrix zero_matrix(int d) { return Matrix(d, std::vector<PolyScalar>(d)); }

Matrix identity(int d) {
    Matrix m = zero_matrix(d);
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t d = a.size();
    Matrix r = zero_matrix(static_cast<int>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t l = 0; l < d; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

bool is_zero(const Matrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

[[noreturn]] void schema_fail(const std::string& field, const std::string& what) {
    throw SchemaError("zhumod/1: field '" + field + "': " + what);
}

// keeps the relation search near the size used by presentations
int relation_cutoff_for(std::size_t gens, int requested) {
    int cut = 0;
    std::size_t words = 1, layer = 1;
    while (cut < requested) {
        layer *= gens;
        if (words + layer > 400) break;
        words += layer;
        ++cut;
    }
    return std::max(cut, std::min(requested, 2));
}

class ModulePolicy : public SpacePolicy {
public:
    explicit ModulePolicy(const std::vector<Matrix>& zero) : zero_(zero) {}
    bool is_free(const ModeOp& op) const override { return op.mode < 0; }
    Vector act_base(const ModeOp& op, int base) const override {
        Vector r;
        if (op.mode != 0) return r;
        const Matrix& m = zero_[op.gen];
        for (std::size_t i = 0; i < m.size(); ++i)
            if (!m[i][base].is_zero()) r.add(Basis{{}, static_cast<int>(i)}, m[i][base]);
        return r;
    }
    long base_cap() const override { return 0; }

private:
    const std::vector<Matrix>& zero_;
};

std::shared_ptr<const ModeAlgebra> module_algebra(std::shared_ptr<const ModeAlgebra> alg, const ZhuModuleInput& n) {
    if (n.p != 0)
        throw PreconditionError("induction is implemented for level-0 inputs only (got p = " + std::to_string(n.p) +
                                "); a level-p input needs the quotient of the induced module, which is not modelled");
    if (!alg->spec().untwisted() || alg->denom() != 1) throw PreconditionError("module computations need an untwisted algebra with integer modes");
    return alg;
}

std::vector<Matrix> zero_modes_of(const ModeAlgebra& alg, const ZhuModuleInput& n) {
    std::vector<Matrix> out;
    for (int g = 0; g < alg.num_generators(); ++g) {
        const ModeOp op{0, static_cast<std::uint16_t>(g)};
        const UEElement want = Vector::basis(Basis{Word{op}});
        auto it = std::find_if(n.actions.begin(), n.actions.end(), [&](const ModuleAction& a) { return a.value == want; });
        if (it == n.actions.end()) throw PreconditionError("module input has no action for the word " + alg.render(op));
        out.push_back(it->matrix);
    }
    return out;
}

std::string clip(std::string s) {
    if (s.size() > 240) s = s.substr(0, 237) + "...";
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// module inputs

ZhuModuleInput make_zhu_module(std::shared_ptr<const ModeAlgebra> alg, long p, std::vector<std::string> labels,
                               const std::vector<ModuleActionSpec>& actions, int relation_cutoff) {
    if (p < 0) throw PreconditionError("p must be >= 0");
    if (labels.empty()) throw SchemaError("zhumod/1: dimension must be positive");
    ZhuModuleInput n;
    n.p = p;
    n.dimension = static_cast<int>(labels.size());
    n.labels = std::move(labels);
    Enveloping zp(alg, p);
    std::vector<ZpGenerator> gens;
    for (std::size_t i = 0; i < actions.size(); ++i) {
        const auto& a = actions[i];
        const std::string path = "$.actions[" + std::to_string(i) + "]";
        if (static_cast<int>(a.matrix.size()) != n.dimension) schema_fail(path + ".matrix", "expected " + std::to_string(n.dimension) + " rows");
        for (const auto& row : a.matrix)
            if (static_cast<int>(row.size()) != n.dimension) schema_fail(path + ".matrix", "expected " + std::to_string(n.dimension) + " columns");
        ModuleAction act{a.name, a.word, evaluate(zp, parse_expression(*alg, a.word)), a.matrix};
        if (!act.value.is_zero() && element_degree(act.value) != 0) schema_fail(path + ".word", "word must have degree 0");
        if (act.value.is_zero() && !is_zero(act.matrix)) schema_fail(path + ".matrix", a.word + " is zero at level " + std::to_string(p) + " but the matrix is not");
        if (!act.value.is_zero()) gens.push_back(ZpGenerator{act.name, act.value});
        n.actions.push_back(std::move(act));
    }
    if (gens.empty()) return n;

    std::map<std::string, const Matrix*> by_name;
    for (const auto& a : n.actions) by_name[a.name] = &a.matrix;
    const auto search = find_relations(zp, gens, relation_cutoff_for(gens.size(), relation_cutoff));
    std::vector<std::string> violated;
    for (const auto& r : search.relations) {
        Matrix sum = zero_matrix(n.dimension);
        for (const auto& [w, coeff] : r.terms) {
            Matrix prod = identity(n.dimension);
            for (int g : w) prod = multiply(prod, *by_name.at(gens[g].name));
            for (int i = 0; i < n.dimension; ++i)
                for (int j = 0; j < n.dimension; ++j) sum[i][j] += prod[i][j] * coeff;
        }
        n.relations.push_back(r.text);
        if (!is_zero(sum)) violated.push_back(r.text);
    }
    if (!violated.empty()) {
        std::string msg = "zhumod/1: matrices violate relation(s):";
        for (const auto& v : violated) msg += " [" + v + "]";
        throw SchemaError(msg);
    }
    return n;
}

ZhuModuleInput load_zhu_module(std::string_view text, std::shared_ptr<const ModeAlgebra> alg, int relation_cutoff) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("zhumod/1: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) schema_fail("$", "expected an object");
    if (doc.value("format", std::string()) != "zhumod/1") schema_fail("$.format", "expected \"zhumod/1\"");
    if (!doc.contains("p") || !doc["p"].is_number_integer()) schema_fail("$.p", "expected an integer");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() || doc["dimension"].get<long>() < 1)
        schema_fail("$.dimension", "expected a positive integer");
    const long p = doc["p"].get<long>();
    const int d = doc["dimension"].get<int>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const auto& ls = doc["labels"];
        if (!ls.is_array() || static_cast<int>(ls.size()) != d) schema_fail("$.labels", "expected " + std::to_string(d) + " names");
        for (const auto& l : ls) {
            if (!l.is_string()) schema_fail("$.labels", "expected strings");
            labels.push_back(l.get<std::string>());
        }
    } else {
        for (int i = 0; i < d; ++i) labels.push_back(d == 1 ? "x" : "x" + std::to_string(i));
    }
    if (!doc.contains("actions") || !doc["actions"].is_array()) schema_fail("$.actions", "expected an array");
    std::vector<ModuleActionSpec> specs;
    const auto& acts = doc["actions"];
    for (std::size_t i = 0; i < acts.size(); ++i) {
        const std::string path = "$.actions[" + std::to_string(i) + "]";
        const auto& a = acts[i];
        if (!a.is_object() || !a.contains("word") || !a["word"].is_string()) schema_fail(path + ".word", "missing");
        ModuleActionSpec s;
        s.word = a["word"].get<std::string>();
        s.name = a.value("name", s.word);
        if (!a.contains("matrix") || !a["matrix"].is_array()) schema_fail(path + ".matrix", "missing");
        for (std::size_t r = 0; r < a["matrix"].size(); ++r) {
            const auto& row = a["matrix"][r];
            if (!row.is_array()) schema_fail(path + ".matrix[" + std::to_string(r) + "]", "expected an array");
            std::vector<PolyScalar> out;
            for (std::size_t c = 0; c < row.size(); ++c) {
                const std::string cell = path + ".matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
                try {
                    if (row[c].is_string()) out.push_back(PolyScalar::parse(row[c].get<std::string>()));
                    else if (row[c].is_number_integer()) out.push_back(PolyScalar(row[c].get<long>()));
                    else schema_fail(cell, "expected an exact scalar string");
                } catch (const ParseError& e) {
                    schema_fail(cell, e.what());
                }
            }
            s.matrix.push_back(std::move(out));
        }
        specs.push_back(std::move(s));
    }
    try {
        return make_zhu_module(std::move(alg), p, std::move(labels), specs, relation_cutoff);
    } catch (const ParseError& e) {
        throw SchemaError(std::string("zhumod/1: bad word: ") + e.what());
    }
}

std::string dump_zhu_module(const ZhuModuleInput& n) {
    ordered_json doc;
    doc["format"] = "zhumod/1";
    doc["p"] = n.p;
    doc["dimension"] = n.dimension;
    doc["labels"] = n.labels;
    doc["actions"] = ordered_json::array();
    for (const auto& a : n.actions) {
        ordered_json m = ordered_json::array();
        for (const auto& row : a.matrix) {
            ordered_json r = ordered_json::array();
            for (const auto& e : row) r.push_back(to_string(e));
            m.push_back(r);
        }
        doc["actions"].push_back({{"name", a.name}, {"word", a.word}, {"matrix", m}});
    }
    return doc.dump(2);
}

ZhuModuleInput scalar_module(std::shared_ptr<const ModeAlgebra> alg, const std::vector<std::pair<std::string, PolyScalar>>& zero_modes) {
    std::vector<ModuleActionSpec> specs;
    for (int g = 0; g < alg->num_generators(); ++g) {
        const std::string& id = alg->spec().generators[g].id;
        PolyScalar v;
        for (const auto& [name, val] : zero_modes)
            if (name == id) v = val;
        specs.push_back(ModuleActionSpec{id, id + "[0]", Matrix{{v}}});
    }
    return make_zhu_module(std::move(alg), 0, {"x"}, specs);
}

ZhuModuleInput default_module(std::shared_ptr<const ModeAlgebra> alg) {
    if (alg->spec().name == "virasoro") return scalar_module(alg, {{"L", PolyScalar::symbol(Symbol::lambda)}});
    return scalar_module(alg, {});
}

// ---------------------------------------------------------------------------
// induced module

InducedModule::InducedModule(std::shared_ptr<const ModeAlgebra> alg, const ZhuModuleInput& n, long depth)
    : zero_(zero_modes_of(*module_algebra(alg, n), n)),
      labels_(n.labels),
      depth_(depth),
      space_(alg, std::make_unique<ModulePolicy>(zero_)) {
    if (depth < 0) throw PreconditionError("depth must be >= 0");
}

long InducedModule::max_degree(const Vector& x) {
    long d = -1;
    for (const auto& [b, c] : x.terms()) d = std::max(d, degree(b));
    return d;
}

std::vector<Basis> InducedModule::basis_upto(long j) const {
    std::vector<Basis> out;
    const auto words = sorted_words(algebra(), -std::max(j, 1L), -1, static_cast<int>(j));
    std::vector<const Word*> ok;
    for (const auto& w : words)
        if (InducedSpace::word_weight(w) <= j) ok.push_back(&w);
    std::stable_sort(ok.begin(), ok.end(), [](const Word* a, const Word* b) {
        const long da = InducedSpace::word_weight(*a), db = InducedSpace::word_weight(*b);
        return da != db ? da < db : *a < *b;
    });
    for (const Word* w : ok)
        for (int i = 0; i < base_dimension(); ++i) out.push_back(Basis{*w, i});
    return out;
}

std::vector<Basis> InducedModule::basis_of_degree(long j) const {
    std::vector<Basis> out;
    for (auto& b : basis_upto(j))
        if (degree(b) == j) out.push_back(std::move(b));
    return out;
}

std::vector<long> InducedModule::dims() const {
    std::vector<long> out(depth_ + 1, 0);
    for (const auto& b : basis_upto(depth_)) ++out[degree(b)];
    return out;
}

Vector InducedModule::act(const ModeOp& op, const Vector& x) const { return space_.apply(op, x); }

Vector InducedModule::field(const VState& a, long n, const Vector& x) const { return fields_.apply(a, n, x); }

Vector InducedModule::mode(const VState& a, long m, const Vector& x) const {
    Vector r;
    for (const auto& [ba, ca] : a.terms()) {
        const long w = InducedSpace::word_weight(ba.word);
        for (const auto& [bx, cx] : x.terms()) r.add_scaled(fields_.word_field(ba.word, m + w - 1, bx), ca * cx);
    }
    return r;
}

std::string InducedModule::render(const Basis& b) const {
    const std::string& lab = labels_.at(b.base);
    return b.word.empty() ? lab : algebra().render(b.word) + " " + lab;
}

std::string InducedModule::render(const Vector& x) const {
    if (x.is_zero()) return "0";
    std::vector<std::pair<PolyScalar, std::string>> parts;
    for (const auto& [b, c] : x.terms()) parts.emplace_back(c, render(b));
    return render_linear(parts);
}

// ---------------------------------------------------------------------------
// module identities

Vector borcherds_defect(const InducedModule& M, const VertexAlgebra& V, const VState& a, const VState& b, long m, long k, long n, const Vector& x) {
    Vector r;
    const long D = InducedModule::max_degree(x);
    if (D < 0) return r;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            const VState A = Vector::basis(ba), B = Vector::basis(bb);
            const long wa = VertexAlgebra::weight(ba), wb = VertexAlgebra::weight(bb);
            const PolyScalar coeff = ca * cb;
            for (long j = 0; j <= wa + wb - n - 1; ++j) {
                const Rational bin = binom_z(m + wa - 1, j);
                if (bin == 0) continue;
                r.add_scaled(M.mode(V.nth_product(A, B, n + j), m + k, x), coeff * bin);
            }
            int sign = V.parity(ba) && V.parity(bb) ? -1 : 1;
            if (n % 2 != 0) sign = -sign;
            const long jmax = n >= 0 ? n : std::max(D + n - k, D - m);
            for (long j = 0; j <= jmax; ++j) {
                Rational bin = binom_z(n, j);
                if (j % 2 != 0) bin = -bin;
                if (bin == 0) continue;
                Vector t = M.mode(A, m + n - j, M.mode(B, k + j - n, x));
                t.add_scaled(M.mode(B, k - j, M.mode(A, m + j, x)), PolyScalar(-sign));
                r.add_scaled(t, coeff * -bin);
            }
        }
    return r;
}

Vector zhu_action_defect(const InducedModule& M, const VertexAlgebra& V, const VState& a, const VState& b, long p, const Vector& x) {
    return M.zero_mode(V.star(a, b, p, Hbar::at(1)), x) - M.zero_mode(a, M.zero_mode(b, x));
}

Vector akbk_defect(const InducedModule& M, const VertexAlgebra& V, const VState& a, const VState& b, long k, long p, const Vector& x) {
    if (k < 0 || k > p) throw PreconditionError("need 0 <= k <= p");
    const Hbar h = Hbar::at(1);
    Vector r = M.mode(a, -k, M.mode(b, k, x));
    for (long m = 0; m <= p - k; ++m) r.add_scaled(M.zero_mode(V.zhu_mode(a, b, -p - 1 - k - m, p, h), x), PolyScalar(-binom_z(-p - 1 - k, m)));
    return r;
}

Vector thann_defect(const InducedModule& M, const VertexAlgebra& V, const VState& a, const Vector& x) {
    return M.zero_mode(V.translate(a) + V.energy(a), x);
}

Vector l0_defect(const InducedModule& M, int g, const Basis& x) {
    Vector r = M.act(ModeOp{0, static_cast<std::uint16_t>(g)}, Vector::basis(x));
    r.add(x, PolyScalar(-InducedModule::degree(x)));
    const Matrix& n = M.zero_mode_matrix(g);
    for (std::size_t i = 0; i < n.size(); ++i)
        if (!n[i][x.base].is_zero()) r.add(Basis{x.word, static_cast<int>(i)}, -n[i][x.base]);
    return r;
}

ComposeResult compose_modes(const InducedModule& M, const VertexAlgebra& V, const VState& a, const VState& b, long m, long k, long check_depth) {
    ComposeResult out;
    const long bar = check_depth + 1;
    const long s = m + k;
    constexpr long kMaxSteps = 64;
    if (bar - k > kMaxSteps) {
        out.decided = false;
        out.note = "undecided at cutoff " + std::to_string(kMaxSteps) + ": induction from k = " + std::to_string(k);
        return out;
    }
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            const VState A = Vector::basis(ba), B = Vector::basis(bb);
            const long wa = VertexAlgebra::weight(ba), wb = VertexAlgebra::weight(bb);
            // C(K) realizes a_{s-K} b_K on degrees below bar, from BI(a, b; bar, K + n; n) with n = s - K - bar
            std::map<long, VState> memo;
            std::function<const VState&(long)> C = [&](long K) -> const VState& {
                auto it = memo.find(K);
                if (it != memo.end()) return it->second;
                VState c;
                if (K < bar) {
                    const long n = s - K - bar;
                    for (long j = 0; j <= wa + wb - n - 1; ++j) {
                        const Rational bin = binom_z(bar + wa - 1, j);
                        if (bin != 0) c.add_scaled(V.nth_product(A, B, n + j), PolyScalar(bin));
                    }
                    for (long j = 1; K + j < bar; ++j) {
                        Rational bin = binom_z(n, j);
                        if (bin == 0) continue;
                        if (j % 2 != 0) bin = -bin;
                        c.add_scaled(C(K + j), PolyScalar(-bin));
                    }
                }
                return memo.emplace(K, std::move(c)).first->second;
            };
            out.c.add_scaled(C(k), ca * cb);
        }
    out.verified = true;
    for (const auto& x : M.basis_upto(check_depth)) {
        const Vector v = Vector::basis(x);
        ++out.vectors_checked;
        if (M.mode(out.c, s, v) != M.mode(a, m, M.mode(b, k, v))) {
            out.verified = false;
            out.note = "mismatch on " + M.render(x);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// suite

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

struct ModuleCase {
    Inputs inputs;
    std::function<std::pair<CaseStatus, std::string>()> run;
};

// first nonzero defect over a set of vectors
std::pair<CaseStatus, std::string> over(const InducedModule& M, const std::vector<Basis>& xs, const std::function<Vector(const Vector&)>& f) {
    for (const auto& x : xs) {
        Vector d = f(Vector::basis(x));
        if (!d.is_zero()) return {CaseStatus::fail, clip("on " + M.render(x) + ": " + M.render(d))};
    }
    return {CaseStatus::pass, ""};
}

}  // namespace

std::vector<CaseRecord> verify_modules(const InducedModule& M, const VertexAlgebra& V, const ModuleSuiteOptions& opt) {
    for (long p : opt.ps)
        if (p < 0) throw PreconditionError("p must be >= 0");
    if (opt.state_weight < 0 || opt.mode_range < 0 || opt.n_lo > opt.n_hi) throw PreconditionError("bad module grid");
    const ModeAlgebra& alg = M.algebra();
    const auto states = V.basis_upto(opt.state_weight);
    const auto all_x = M.basis_upto(M.depth());
    auto lab = [&V](const Basis& b) { return V.render(b); };
    std::vector<ModuleCase> cases;

    for (int g = 0; g < alg.num_generators(); ++g)
        for (long n = -opt.mode_range; n <= opt.mode_range; ++n) {
            const ModeOp op{static_cast<std::int32_t>(n), static_cast<std::uint16_t>(g)};
            cases.push_back({{{"check", "grading"}, {"op", alg.render(op)}}, [&M, &all_x, op, n] {
                                 for (const auto& x : all_x) {
                                     const Vector y_all = M.act(op, Vector::basis(x));
                                     for (const auto& [y, c] : y_all.terms())
                                         if (InducedModule::degree(y) != InducedModule::degree(x) - n)
                                             return std::pair{CaseStatus::fail, "on " + M.render(x) + ": term " + M.render(y)};
                                 }
                                 return std::pair{CaseStatus::pass, std::string()};
                             }});
        }

    for (const auto& a : states)
        for (const auto& b : states)
            for (long m = -opt.mode_range; m <= opt.mode_range; ++m)
                for (long k = -opt.mode_range; k <= opt.mode_range; ++k)
                    for (long n = opt.n_lo; n <= opt.n_hi; ++n)
                        cases.push_back({{{"check", "borcherds"}, {"a", lab(a)}, {"b", lab(b)}, {"m", std::to_string(m)}, {"k", std::to_string(k)}, {"n", std::to_string(n)}},
                                         [&M, &V, &all_x, a, b, m, k, n] {
                                             const VState A = Vector::basis(a), B = Vector::basis(b);
                                             return over(M, all_x, [&](const Vector& x) { return borcherds_defect(M, V, A, B, m, k, n, x); });
                                         }});

    for (long p : opt.ps) {
        const auto mp = M.basis_of_degree(p);
        for (const auto& a : states)
            for (const auto& b : states)
                cases.push_back({{{"check", "zhu_action"}, {"p", std::to_string(p)}, {"a", lab(a)}, {"b", lab(b)}}, [&M, &V, mp, a, b, p] {
                                     const VState A = Vector::basis(a), B = Vector::basis(b);
                                     return over(M, mp, [&](const Vector& x) { return zhu_action_defect(M, V, A, B, p, x); });
                                 }});
        for (long k = 0; k <= p; ++k)
            for (const auto& a : states)
                for (const auto& b : states)
                    cases.push_back({{{"check", "akbk"}, {"p", std::to_string(p)}, {"k", std::to_string(k)}, {"a", lab(a)}, {"b", lab(b)}}, [&M, &V, mp, a, b, k, p] {
                                         const VState A = Vector::basis(a), B = Vector::basis(b);
                                         return over(M, mp, [&](const Vector& x) { return akbk_defect(M, V, A, B, k, p, x); });
                                     }});
        std::vector<Basis> low;
        for (const auto& x : all_x)
            if (InducedModule::degree(x) <= p) low.push_back(x);
        auto gens = std::make_shared<std::vector<std::pair<std::string, VState>>>(j_generators(V, p, opt.state_weight + 2 * p + 1, Hbar::at(1)));
        for (std::size_t gi = 0; gi < gens->size(); ++gi)
            cases.push_back({{{"check", "j_annihilation"}, {"p", std::to_string(p)}, {"j", (*gens)[gi].first}}, [&M, low, gens, gi] {
                                 const VState& g = (*gens)[gi].second;
                                 return over(M, low, [&](const Vector& x) { return M.zero_mode(g, x); });
                             }});
    }

    for (const auto& a : V.basis_upto(opt.state_weight + 2))
        cases.push_back({{{"check", "thann"}, {"a", lab(a)}}, [&M, &V, &all_x, a] {
                             const VState A = Vector::basis(a);
                             return over(M, all_x, [&](const Vector& x) { return thann_defect(M, V, A, x); });
                         }});

    if (opt.conformal) {
        const int g = *opt.conformal;
        for (long j = 0; j <= M.depth(); ++j)
            cases.push_back({{{"check", "l0"}, {"degree", std::to_string(j)}}, [&M, g, j] {
                                 for (const auto& x : M.basis_of_degree(j)) {
                                     Vector d = l0_defect(M, g, x);
                                     if (!d.is_zero()) return std::pair{CaseStatus::fail, clip("on " + M.render(x) + ": " + M.render(d))};
                                 }
                                 return std::pair{CaseStatus::pass, std::string()};
                             }});
    }

    std::vector<Basis> gen_states{Basis{}};
    for (int g = 0; g < alg.num_generators(); ++g) {
        const VState s = V.generator(g);
        for (const auto& [b, c] : s.terms()) gen_states.push_back(b);
    }
    const long check_depth = std::min(M.depth(), 3L);
    for (const auto& a : gen_states)
        for (const auto& b : gen_states)
            for (auto [m, k] : std::vector<std::pair<long, long>>{{0, 0}, {1, -1}, {2, -2}, {-1, 1}, {1, 0}})
                cases.push_back({{{"check", "compose"}, {"a", lab(a)}, {"b", lab(b)}, {"m", std::to_string(m)}, {"k", std::to_string(k)}}, [&M, &V, a, b, m, k, check_depth] {
                                     auto r = compose_modes(M, V, Vector::basis(a), Vector::basis(b), m, k, check_depth);
                                     if (!r.decided) return std::pair{CaseStatus::undecided, r.note};
                                     return r.verified ? std::pair{CaseStatus::pass, std::string()} : std::pair{CaseStatus::fail, r.note};
                                 }});

    std::vector<CaseRecord> out(cases.size());
    parallel_for(cases.size(), opt.jobs, [&](std::size_t i) {
        CaseRecord& r = out[i];
        r.suite = "modules";
        r.inputs = cases[i].inputs;
        try {
            auto [st, d] = cases[i].run();
            r.status = st;
            r.defect = std::move(d);
        } catch (const ZhukitError& e) {
            r.status = CaseStatus::error;
            r.defect = e.what();
        }
    });
    return out;
}

}  // namespace zhukit
