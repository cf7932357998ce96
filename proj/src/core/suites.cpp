// SPDX-License-Identifier: Apache-2.0
#include "suites.hpp"

#include <array>
#include <functional>

#include "parallel.hpp"

namespace zhukit {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"unit", "tind", "modn", "expbor", "skew", "brakderiv", "assoc", "leftideal", "phi"};
    return names;
}

bool is_suite(const std::string& id) {
    for (const auto& s : suite_names())
        if (s == id) return true;
    return false;
}

namespace {

// J spans are capped by column count so algebras with weight-1 generators stay tractable;
// cases whose defect lies beyond the cap are reported undecided.
constexpr long kMaxJCutoff = 16;
constexpr std::size_t kMaxJColumns = 3000;
constexpr std::size_t kMaxSlackColumns = 12000;
constexpr long kMinSlack = 2, kMaxSlack = 6;

using Inputs = std::vector<std::pair<std::string, std::string>>;
using Task = std::function<CaseRecord()>;

class Runner {
public:
    Runner(std::string suite, const VertexAlgebra& v, const SuiteOptions& opt)
        : suite_(std::move(suite)), v_(v), opt_(opt), vj_(specialize_centrals(v.algebra())) {
        states_ = v.basis_upto(opt.weight_cutoff);
        explicit_h_ = opt.hbar ? Hbar::at(*opt.hbar) : Hbar::symbolic();
        if (opt.hbar)
            modj_h_ = {*opt.hbar};
        else
            modj_h_ = opt.hbar_values;
    }

    const VertexAlgebra& v() const { return v_; }
    const std::vector<Basis>& states() const { return states_; }
    long cutoff() const { return opt_.weight_cutoff; }
    const Hbar& explicit_h() const { return explicit_h_; }
    const std::vector<Rational>& modj_h() const { return modj_h_; }
    const SuiteOptions& opt() const { return opt_; }

    std::vector<std::pair<Basis, Basis>> pairs() const {
        std::vector<std::pair<Basis, Basis>> out;
        for (const auto& a : states_)
            for (const auto& b : states_)
                if (VertexAlgebra::weight(a) + VertexAlgebra::weight(b) <= cutoff()) out.emplace_back(a, b);
        return out;
    }
    std::vector<std::array<Basis, 3>> triples() const {
        std::vector<std::array<Basis, 3>> out;
        for (const auto& a : states_)
            for (const auto& b : states_)
                for (const auto& c : states_)
                    if (VertexAlgebra::weight(a) + VertexAlgebra::weight(b) + VertexAlgebra::weight(c) <= cutoff())
                        out.push_back({a, b, c});
        return out;
    }

    int sign(const Basis& a, const Basis& b) const { return v_.parity(a) && v_.parity(b) ? -1 : 1; }
    std::string label(const Basis& b) const { return v_.render(b); }
    std::string label(const VState& s) const { return v_.render(s); }

    // Registers the J span needed at (p, hbar) up to the given defect weight.
    void need_j(long p, const Rational& h, long weight) {
        auto& w = needed_[{p, to_string(h)}];
        w = std::max(w, std::min(weight, j_cap()));
        hvals_[to_string(h)] = h;
    }
    long j_cap() {
        if (j_cap_ < 0) {
            j_cap_ = 0;
            while (j_cap_ < kMaxJCutoff && vj_.basis_upto(j_cap_ + 1 + kMinSlack).size() <= kMaxJColumns) ++j_cap_;
        }
        return j_cap_;
    }
    long max_slack(long w) const {
        long s = kMinSlack + 1;
        while (s < kMaxSlack && vj_.basis_upto(w + s + 1).size() <= kMaxSlackColumns) ++s;
        return s;
    }
    const JSpan& j(long p, const Rational& h) const { return *spans_.at({p, to_string(h)}); }

    void add(Task t) { tasks_.push_back(std::move(t)); }

    CaseRecord exact(Inputs in, const VState& defect) const {
        CaseRecord r{suite_, std::move(in), CaseStatus::pass, {}};
        if (!defect.is_zero()) {
            r.status = CaseStatus::fail;
            r.defect = v_.render(defect);
        }
        return r;
    }
    CaseRecord mod_j(Inputs in, const VState& defect, const JSpan& J) const {
        CaseRecord r{suite_, std::move(in), CaseStatus::pass, {}};
        switch (J.contains(defect)) {
            case Membership::in: break;
            case Membership::not_in:
                r.status = CaseStatus::fail;
                r.defect = "not in J: " + v_.render(defect);
                break;
            case Membership::undecided:
                r.status = CaseStatus::undecided;
                r.defect = "undecided at cutoff " + std::to_string(J.cutoff()) + ": weight " + std::to_string(v_.max_weight(defect));
                break;
        }
        return r;
    }

    std::vector<CaseRecord> run() {
        for (const auto& [key, w] : needed_) {
            spans_[key] = stable_j_span(vj_, key.first, w, hvals_.at(key.second), kMinSlack, max_slack(w));
        }
        std::vector<CaseRecord> out(tasks_.size());
        parallel_for(tasks_.size(), opt_.jobs, [&](std::size_t i) {
            try {
                out[i] = tasks_[i]();
            } catch (const std::exception& e) {
                out[i] = CaseRecord{suite_, {}, CaseStatus::error, e.what()};
            }
        });
        return out;
    }

private:
    std::string suite_;
    const VertexAlgebra& v_;
    const SuiteOptions& opt_;
    VertexAlgebra vj_;  // central values specialized; J rows are specialized the same way
    std::vector<Basis> states_;
    Hbar explicit_h_;
    std::vector<Rational> modj_h_;
    long j_cap_ = -1;
    std::map<std::pair<long, std::string>, long> needed_;
    std::map<std::string, Rational> hvals_;
    std::map<std::pair<long, std::string>, std::unique_ptr<JSpan>> spans_;
    std::vector<Task> tasks_;
};

Inputs base_inputs(long p, const std::string& hbar) { return {{"p", std::to_string(p)}, {"hbar", hbar}}; }

void build_unit(Runner& R) {
    const auto& v = R.v();
    for (long p : R.opt().ps) {
        for (const auto& a : R.states()) {
            R.add([&R, &v, p, a] {
                Inputs in = base_inputs(p, R.explicit_h().str());
                in.emplace_back("side", "left");
                in.emplace_back("a", R.label(a));
                VState s = Vector::basis(a);
                return R.exact(std::move(in), v.star(v.vacuum(), s, p, R.explicit_h()) - s);
            });
        }
        for (const auto& hv : R.modj_h()) {
            R.need_j(p, hv, R.cutoff() + 2 * p);
            for (const auto& a : R.states())
                R.add([&R, &v, p, hv, a] {
                    Inputs in = base_inputs(p, to_string(hv));
                    in.emplace_back("side", "right");
                    in.emplace_back("a", R.label(a));
                    VState s = Vector::basis(a);
                    return R.mod_j(std::move(in), v.star(s, v.vacuum(), p, Hbar::at(hv)) - s, R.j(p, hv));
                });
        }
    }
}

void build_tind(Runner& R) {
    const auto& v = R.v();
    const Hbar h = R.explicit_h();
    for (long p : R.opt().ps)
        for (const auto& [a, b] : R.pairs())
            for (long n = -5; n <= 3; ++n)
                R.add([&R, &v, h, p, a = a, b = b, n] {
                    Inputs in = base_inputs(p, h.str());
                    in.emplace_back("a", R.label(a));
                    in.emplace_back("b", R.label(b));
                    in.emplace_back("n", std::to_string(n));
                    VState x = Vector::basis(a), y = Vector::basis(b);
                    // (Ta)_[n] b + h (gamma_a + p + n + 1) a_[n] b + n a_[n-1] b
                    const long ga = VertexAlgebra::weight(a);
                    VState d = v.zhu_mode(v.translate(x), y, n, p, h) + v.zhu_mode(x, y, n, p, h) * (h.pow(1) * PolyScalar(ga + p + n + 1)) +
                               v.zhu_mode(x, y, n - 1, p, h) * PolyScalar(n);
                    return R.exact(std::move(in), d);
                });
}

// Largest index where x_[k] y can be nonzero.
long top_mode(const VertexAlgebra& v, const VState& x, const VState& y) { return v.max_weight(x) + v.max_weight(y) - 1; }

void build_modn(Runner& R) {
    const auto& v = R.v();
    const Hbar h = R.explicit_h();
    const long kmin = -2, kmax = kmin + R.opt().series_order - 1;
    for (long p : R.opt().ps)
        for (const auto& t : R.triples())
            for (long n = -2; n <= 1; ++n)
                R.add([&R, &v, h, p, t, n, kmin, kmax] {
                    Inputs in = base_inputs(p, h.str());
                    in.emplace_back("a", R.label(t[0]));
                    in.emplace_back("b", R.label(t[1]));
                    in.emplace_back("c", R.label(t[2]));
                    in.emplace_back("n", std::to_string(n));
                    in.emplace_back("k", std::to_string(kmin) + ".." + std::to_string(kmax));
                    VState a = Vector::basis(t[0]), b = Vector::basis(t[1]), c = Vector::basis(t[2]);
                    const int sg = R.sign(t[0], t[1]) * (n % 2 == 0 ? 1 : -1);
                    VState ab = v.zhu_mode(a, b, n, p, h);
                    for (long k = kmin; k <= kmax; ++k) {
                        // coefficient of w^{-k-1}
                        VState lhs;
                        for (long i = 0; k + i <= top_mode(v, ab, c); ++i) {
                            Rational bin = binom_z(n + p + 1, i);
                            if (bin != 0) lhs.add_scaled(v.zhu_mode(ab, c, k + i, p, h), h.pow(i) * bin);
                        }
                        VState rhs;
                        const long jmax = std::max(top_mode(v, b, c) - k, top_mode(v, a, c));
                        for (long j = 0; j <= jmax; ++j) {
                            Rational bin = binom_z(n, j);
                            if (bin == 0) continue;
                            if (j % 2) bin = -bin;
                            VState term;
                            if (k + j <= top_mode(v, b, c)) term += v.zhu_mode(a, v.zhu_mode(b, c, k + j, p, h), n - j, p, h);
                            if (j <= top_mode(v, a, c)) term -= v.zhu_mode(b, v.zhu_mode(a, c, j, p, h), n + k - j, p, h) * PolyScalar(sg);
                            rhs.add_scaled(term, PolyScalar(bin));
                        }
                        VState d = lhs - rhs;
                        if (!d.is_zero()) {
                            CaseRecord r = R.exact(std::move(in), d);
                            r.defect = "k=" + std::to_string(k) + ": " + r.defect;
                            return r;
                        }
                    }
                    return R.exact(std::move(in), VState());
                });
}

void build_expbor(Runner& R) {
    const auto& v = R.v();
    const Hbar h = R.explicit_h();
    for (long p : R.opt().ps)
        for (const auto& t : R.triples())
            for (long n = -p - 2; n <= 1; ++n)
                for (long k = -p - 2; k <= 1; ++k)
                    R.add([&R, &v, h, p, t, n, k] {
                        Inputs in = base_inputs(p, h.str());
                        in.emplace_back("a", R.label(t[0]));
                        in.emplace_back("b", R.label(t[1]));
                        in.emplace_back("c", R.label(t[2]));
                        in.emplace_back("n", std::to_string(n));
                        in.emplace_back("k", std::to_string(k));
                        VState a = Vector::basis(t[0]), b = Vector::basis(t[1]), c = Vector::basis(t[2]);
                        const int sg = R.sign(t[0], t[1]) * (n % 2 == 0 ? 1 : -1);
                        VState lhs = v.zhu_mode(v.zhu_mode(a, b, n, p, h), c, k, p, h);
                        VState rhs;
                        const long wa = VertexAlgebra::weight(t[0]), wb = VertexAlgebra::weight(t[1]), wc = VertexAlgebra::weight(t[2]);
                        // b_[m] c vanishes for m > wb+wc-1, a_[j] c for j > wa+wc-1, and b_[m](a_[j] c) for m > wa+wb+wc-j-2
                        const long jmax = std::max(wa + wc - 1, wb + wc - 1 - k);
                        for (long j = 0; j <= jmax; ++j) {
                            Rational bj = binom_z(n, j);
                            if (bj == 0) continue;
                            if (j % 2) bj = -bj;
                            const long i1 = wb + wc - 1 - j - k;
                            const long i2 = j <= wa + wc - 1 ? wa + wb + wc - n - k - 2 : -1;
                            for (long i = 0; i <= std::max(i1, i2); ++i) {
                                Rational bi = binom_z(-n - p - 1, i);
                                if (bi == 0) continue;
                                VState term;
                                if (i <= i1) term += v.zhu_mode(a, v.zhu_mode(b, c, i + j + k, p, h), n - j, p, h);
                                if (i <= i2) term -= v.zhu_mode(b, v.zhu_mode(a, c, j, p, h), i - j + n + k, p, h) * PolyScalar(sg);
                                rhs.add_scaled(term, h.pow(i) * (bj * bi));
                            }
                        }
                        return R.exact(std::move(in), lhs - rhs);
                    });
}

void build_skew(Runner& R) {
    const auto& v = R.v();
    for (long p : R.opt().ps)
        for (const auto& hv : R.modj_h()) {
            R.need_j(p, hv, R.cutoff() + 2 * p);
            for (const auto& [a, b] : R.pairs())
                R.add([&R, &v, p, hv, a = a, b = b] {
                    Inputs in = base_inputs(p, to_string(hv));
                    in.emplace_back("a", R.label(a));
                    in.emplace_back("b", R.label(b));
                    const Hbar h = Hbar::at(hv);
                    VState x = Vector::basis(a), y = Vector::basis(b);
                    VState d = v.star(x, y, p, h) - v.star(y, x, p, h) * PolyScalar(R.sign(a, b)) - v.hbar_bracket(x, y, p, h) * h.pow(1);
                    return R.mod_j(std::move(in), d, R.j(p, hv));
                });
        }
}

void build_brakderiv(Runner& R) {
    const auto& v = R.v();
    const Hbar h = R.explicit_h();
    for (long p : R.opt().ps)
        for (const auto& t : R.triples())
            for (long n = -p - 2; n <= 1; ++n)
                R.add([&R, &v, h, p, t, n] {
                    Inputs in = base_inputs(p, h.str());
                    in.emplace_back("a", R.label(t[0]));
                    in.emplace_back("b", R.label(t[1]));
                    in.emplace_back("c", R.label(t[2]));
                    in.emplace_back("n", std::to_string(n));
                    VState a = Vector::basis(t[0]), b = Vector::basis(t[1]), c = Vector::basis(t[2]);
                    VState lhs = v.hbar_bracket(a, v.zhu_mode(b, c, n, p, h), p, h);
                    VState rhs = v.zhu_mode(v.hbar_bracket(a, b, p, h), c, n, p, h) +
                                 v.zhu_mode(b, v.hbar_bracket(a, c, p, h), n, p, h) * PolyScalar(R.sign(t[0], t[1]));
                    return R.exact(std::move(in), lhs - rhs);
                });
}

void build_assoc(Runner& R) {
    const auto& v = R.v();
    for (long p : R.opt().ps)
        for (const auto& hv : R.modj_h()) {
            R.need_j(p, hv, R.cutoff() + 4 * p);
            for (const auto& t : R.triples())
                R.add([&R, &v, p, hv, t] {
                    Inputs in = base_inputs(p, to_string(hv));
                    in.emplace_back("a", R.label(t[0]));
                    in.emplace_back("b", R.label(t[1]));
                    in.emplace_back("c", R.label(t[2]));
                    const Hbar h = Hbar::at(hv);
                    VState a = Vector::basis(t[0]), b = Vector::basis(t[1]), c = Vector::basis(t[2]);
                    VState d = v.star(v.star(a, b, p, h), c, p, h) - v.star(a, v.star(b, c, p, h), p, h);
                    return R.mod_j(std::move(in), d, R.j(p, hv));
                });
        }
}

void build_leftideal(Runner& R) {
    const auto& v = R.v();
    for (long p : R.opt().ps)
        for (const auto& hv : R.modj_h()) {
            R.need_j(p, hv, R.cutoff() + 2 * p);
            const Hbar h = Hbar::at(hv);
            auto gens = std::make_shared<std::vector<std::pair<std::string, VState>>>(j_generators(v, p, R.cutoff(), h));
            for (std::size_t gi = 0; gi < gens->size(); ++gi)
                for (const auto& a : R.states()) {
                    if (VertexAlgebra::weight(a) + v.max_weight((*gens)[gi].second) > R.cutoff()) continue;
                    for (const char* side : {"left", "right"})
                        R.add([&R, &v, p, hv, h, gens, gi, a, side] {
                            const auto& [name, g] = (*gens)[gi];
                            Inputs in = base_inputs(p, to_string(hv));
                            in.emplace_back("side", side);
                            in.emplace_back("a", R.label(a));
                            in.emplace_back("j", name);
                            VState x = Vector::basis(a);
                            VState d = side[0] == 'l' ? v.star(x, g, p, h) : v.star(g, x, p, h);
                            return R.mod_j(std::move(in), d, R.j(p, hv));
                        });
                }
        }
}

void build_phi(Runner& R) {
    const auto& v = R.v();
    for (long p : R.opt().ps) {
        if (p < 1) continue;
        for (const auto& hv : R.modj_h()) {
            R.need_j(p - 1, hv, R.cutoff() + 2 * p);
            const Hbar h = Hbar::at(hv);
            for (auto& [name, g] : j_generators(v, p, R.cutoff(), h))
                R.add([&R, p, hv, name = name, g = g] {
                    Inputs in = base_inputs(p, to_string(hv));
                    in.emplace_back("check", "containment");
                    in.emplace_back("j", name);
                    return R.mod_j(std::move(in), g, R.j(p - 1, hv));
                });
            for (const auto& [a, b] : R.pairs())
                R.add([&R, &v, p, hv, h, a = a, b = b] {
                    Inputs in = base_inputs(p, to_string(hv));
                    in.emplace_back("check", "product");
                    in.emplace_back("a", R.label(a));
                    in.emplace_back("b", R.label(b));
                    VState x = Vector::basis(a), y = Vector::basis(b);
                    return R.mod_j(std::move(in), v.star(x, y, p, h) - v.star(x, y, p - 1, h), R.j(p - 1, hv));
                });
        }
    }
}

}  // namespace

std::vector<CaseRecord> verify_suite(const std::string& id, const VertexAlgebra& v, const SuiteOptions& opt) {
    if (opt.weight_cutoff < 0) throw PreconditionError("weight cutoff must be nonnegative");
    if (opt.series_order < 1) throw PreconditionError("series order must be positive");
    for (long p : opt.ps)
        if (p < 0) throw PreconditionError("p must be nonnegative");
    if (opt.hbar && *opt.hbar == 0) throw PreconditionError("hbar must be nonzero");
    Runner R(id, v, opt);
    static const std::map<std::string, void (*)(Runner&)> builders{
        {"unit", build_unit},   {"tind", build_tind},           {"modn", build_modn},
        {"expbor", build_expbor}, {"skew", build_skew},         {"brakderiv", build_brakderiv},
        {"assoc", build_assoc}, {"leftideal", build_leftideal}, {"phi", build_phi},
    };
    auto it = builders.find(id);
    if (it == builders.end()) throw PreconditionError("unknown suite '" + id + "'");
    it->second(R);
    return R.run();
}

}  // namespace zhukit
