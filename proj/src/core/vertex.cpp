// SPDX-License-Identifier: Apache-2.0
#include "vertex.hpp"

#include <functional>
#include <mutex>

namespace zhukit {

namespace {

// Creation modes g_(n), n <= -1, are free; everything else kills the vacuum.
class VacuumPolicy : public SpacePolicy {
public:
    explicit VacuumPolicy(std::shared_ptr<const ModeAlgebra> alg) : alg_(std::move(alg)) {}
    bool is_free(const ModeOp& op) const override { return op.mode <= -to_long(alg_->weight(op.gen)); }
    Vector act_base(const ModeOp&, int) const override { return {}; }
    long base_cap() const override { return 0; }

private:
    std::shared_ptr<const ModeAlgebra> alg_;
};

std::shared_ptr<const ModeAlgebra> checked(std::shared_ptr<const ModeAlgebra> alg) {
    if (!alg->spec().untwisted())
        throw PreconditionError("vertex algebra computations need an untwisted algebra (degree cosets [0], integer weights)");
    for (const auto& g : alg->spec().generators)
        if (g.weight <= 0) throw PreconditionError("generator " + g.id + " must have positive weight");
    return alg;
}

}  // namespace

Hbar Hbar::at(const Rational& v) {
    if (v == 0) throw PreconditionError("hbar must be nonzero");
    Hbar h;
    h.value = v;
    return h;
}

PolyScalar Hbar::pow(long k) const {
    if (!value) return PolyScalar::hbar_power(static_cast<int>(k));
    Rational base = k < 0 ? Rational(1 / *value) : *value;
    Rational r = 1;
    for (long i = 0; i < std::abs(k); ++i) r *= base;
    return PolyScalar(r);
}

std::string Hbar::str() const { return value ? to_string(*value) : "h"; }

VertexAlgebra::VertexAlgebra(std::shared_ptr<const ModeAlgebra> alg) : space_(checked(alg), std::make_unique<VacuumPolicy>(alg)) {}

ModeOp FieldEngine::field_mode(int g, long n) const {
    // g_(n) = g_m with m = n - Delta + 1
    return ModeOp{static_cast<std::int32_t>(n - to_long(space_.algebra().weight(g)) + 1), static_cast<std::uint16_t>(g)};
}

ModeOp VertexAlgebra::field_mode(int g, long n) const { return fields_.field_mode(g, n); }

VState VertexAlgebra::generator(int g) const { return space_.apply(field_mode(g, -1), vacuum()); }

VState VertexAlgebra::apply_field_mode(int g, long n, const VState& b) const { return space_.apply(field_mode(g, n), b); }

std::optional<long> VertexAlgebra::homogeneous_weight(const VState& a) const {
    std::optional<long> w;
    for (const auto& [b, c] : a.terms()) {
        if (w && *w != weight(b)) return std::nullopt;
        w = weight(b);
    }
    return w.value_or(0);
}

long VertexAlgebra::max_weight(const VState& a) const {
    long w = -1;
    for (const auto& [b, c] : a.terms()) w = std::max(w, weight(b));
    return w;
}

std::vector<Basis> VertexAlgebra::basis_upto(long w) const {
    const ModeAlgebra& A = algebra();
    std::vector<ModeOp> ops;
    for (int g = 0; g < A.num_generators(); ++g)
        for (long m = -to_long(A.weight(g)); m >= -w; --m) ops.push_back(ModeOp{static_cast<std::int32_t>(m), static_cast<std::uint16_t>(g)});
    std::sort(ops.begin(), ops.end());
    std::vector<Basis> out{Basis{}};
    Word cur;
    std::function<void(std::size_t, long)> rec = [&](std::size_t start, long left) {
        for (std::size_t i = start; i < ops.size(); ++i) {
            if (-ops[i].mode > left) continue;
            cur.push_back(ops[i]);
            out.push_back(Basis{cur});
            rec(A.odd(ops[i]) ? i + 1 : i, left + ops[i].mode);
            cur.pop_back();
        }
    };
    rec(0, w);
    std::stable_sort(out.begin(), out.end(), [](const Basis& a, const Basis& b) {
        long wa = weight(a), wb = weight(b);
        return wa != wb ? wa < wb : a.word < b.word;
    });
    return out;
}

std::vector<Basis> VertexAlgebra::basis_of_weight(long w) const {
    std::vector<Basis> out;
    for (auto& b : basis_upto(w))
        if (weight(b) == w) out.push_back(std::move(b));
    return out;
}

int FieldEngine::word_parity(const Word& w) const {
    int p = 0;
    for (const auto& o : w) p ^= space_.algebra().odd(o) ? 1 : 0;
    return p;
}

std::size_t FieldEngine::cache_size() const {
    std::shared_lock lock(mu_);
    return cache_.size();
}

const Vector& FieldEngine::word_field(const Word& a, long n, const Basis& v) const {
    Key key{a, n, v};
    {
        std::shared_lock lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    auto res = std::make_unique<Vector>(compute(a, n, v));
    std::unique_lock lock(mu_);
    auto [it, fresh] = cache_.try_emplace(std::move(key), std::move(res));
    return *it->second;
}

Vector FieldEngine::compute(const Word& a, long n, const Basis& v) const {
    const long wv = InducedSpace::word_weight(v.word);
    const long wa = InducedSpace::word_weight(a);
    if (wa + wv - n - 1 < 0) return {};
    if (a.empty()) return n == -1 ? Vector::basis(v) : Vector();
    // (u_(-1-t) a')_(n) = sum_j binom(t+j, j) [u_(-1-t-j) a'_(n+j) + p(u,a') (-1)^t a'_(n-1-t-j) u_(j)]
    const ModeOp& w1 = a.front();
    const int u = w1.gen;
    const long du = to_long(space_.algebra().weight(u));
    const long t = -w1.mode - du;
    const Word rest(a.begin() + 1, a.end());
    const long wr = InducedSpace::word_weight(rest);
    Vector r;
    for (long j = 0; j <= wr + wv - 1 - n; ++j) {
        const Vector& x = word_field(rest, n + j, v);
        if (x.is_zero()) continue;
        r.add_scaled(space_.apply(field_mode(u, -1 - t - j), x), PolyScalar(binom_z(t + j, j)));
    }
    int sign = (t % 2 == 0) ? 1 : -1;
    if (space_.algebra().odd(w1) && word_parity(rest)) sign = -sign;
    for (long j = 0; j <= du + wv - 1; ++j) {
        const Vector& y = space_.apply(field_mode(u, j), v);
        if (y.is_zero()) continue;
        const PolyScalar c(Rational(binom_z(t + j, j) * sign));
        for (const auto& [bb, cc] : y.terms()) r.add_scaled(word_field(rest, n - 1 - t - j, bb), cc * c);
    }
    return r;
}

Vector FieldEngine::apply(const Vector& a, long n, const Vector& x) const {
    Vector r;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bx, cx] : x.terms()) r.add_scaled(word_field(ba.word, n, bx), ca * cx);
    return r;
}

int VertexAlgebra::parity(const Basis& b) const {
    int p = 0;
    for (const auto& o : b.word) p ^= algebra().odd(o) ? 1 : 0;
    return p;
}

std::size_t VertexAlgebra::cache_size() const { return fields_.cache_size(); }

VState VertexAlgebra::nth_product(const VState& a, const VState& b, long n) const {
    VState r;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) r.add_scaled(fields_.word_field(ba.word, n, bb), ca * cb);
    return r;
}

VState VertexAlgebra::translate(const VState& a) const {
    VState r;
    for (const auto& [b, c] : a.terms())
        for (std::size_t i = 0; i < b.word.size(); ++i) {
            // (T u)_(n) = -n u_(n-1)
            Word w = b.word;
            const long n = w[i].mode + to_long(algebra().weight(w[i].gen)) - 1;
            w[i].mode -= 1;
            r.add_scaled(space_.apply_word(w, vacuum()), c * PolyScalar(-n));
        }
    return r;
}

VState VertexAlgebra::energy(const VState& a) const {
    VState r;
    for (const auto& [b, c] : a.terms()) r.add(b, c * PolyScalar(weight(b)));
    return r;
}

VState VertexAlgebra::zhu_mode(const VState& a, const VState& b, long n, long p, const Hbar& h) const {
    VState r;
    for (const auto& [ba, ca] : a.terms()) {
        const Rational gamma = gamma_value(TwistData{CosetZ(), Rational(weight(ba))});
        for (const auto& [bb, cb] : b.terms()) {
            const long jmax = weight(ba) + weight(bb) - n - 1;
            for (long j = 0; j <= jmax; ++j) {
                Rational bin = binom_q(gamma + p, j);
                if (bin == 0) continue;
                r.add_scaled(fields_.word_field(ba.word, n + j, bb), ca * cb * h.pow(j) * bin);
            }
        }
    }
    return r;
}

VState VertexAlgebra::star(const VState& a, const VState& b, long p, const Hbar& h) const {
    VState r;
    for (long m = 0; m <= p; ++m) r.add_scaled(zhu_mode(a, b, -p - 1 - m, p, h), h.pow(-p - m) * binom_z(-p - 1, m));
    return r;
}

VState VertexAlgebra::hbar_bracket(const VState& a, const VState& b, long p, const Hbar& h) const {
    const long jmax = max_weight(a) + max_weight(b) - 1;
    VState r;
    for (long j = 0; j <= jmax; ++j) r.add_scaled(zhu_mode(a, b, j, p, h), h.pow(j) * binom_z(-p - 1, j));
    return r;
}

VState VertexAlgebra::hbar_bracket_direct(const VState& a, const VState& b, const Hbar& h) const {
    VState r;
    for (const auto& [ba, ca] : a.terms()) {
        const Rational gamma = gamma_value(TwistData{CosetZ(), Rational(weight(ba))});
        for (const auto& [bb, cb] : b.terms())
            for (long j = 0; j <= weight(ba) + weight(bb) - 1; ++j) {
                Rational bin = binom_q(gamma - 1, j);
                if (bin == 0) continue;
                r.add_scaled(fields_.word_field(ba.word, j, bb), ca * cb * h.pow(j) * bin);
            }
    }
    return r;
}

std::string VertexAlgebra::render(const Basis& b) const {
    if (b.word.empty()) return "vac";
    std::string s;
    for (const auto& o : b.word) {
        const long n = o.mode + to_long(algebra().weight(o.gen)) - 1;
        s += algebra().spec().generators[o.gen].id + "(" + std::to_string(n) + ") ";
    }
    return s + "vac";
}

std::string VertexAlgebra::render(const VState& a) const {
    std::vector<const Vector::Map::value_type*> items;
    for (const auto& t : a.terms()) items.push_back(&t);
    std::stable_sort(items.begin(), items.end(), [](auto* x, auto* y) { return weight(x->first) > weight(y->first); });
    std::vector<std::pair<PolyScalar, std::string>> parts;
    for (auto* t : items) parts.emplace_back(t->second, render(t->first));
    return render_linear(parts);
}

// ---------------------------------------------------------------------------

JSpan::JSpan(const VertexAlgebra& v, long p, long cutoff, const Rational& hbar, long slack)
    : v_(v), p_(p), cutoff_(cutoff), slack_(slack), hbar_(hbar) {
    if (p < 0 || cutoff < 0 || slack < 0) throw PreconditionError("bad J span parameters");
    const Hbar h = Hbar::at(hbar);
    const long top = cutoff + slack;
    std::vector<Basis> states = v.basis_upto(top);
    // columns ordered by weight, highest first
    std::vector<Basis> order = states;
    std::stable_sort(order.begin(), order.end(), [](const Basis& a, const Basis& b) { return VertexAlgebra::weight(a) > VertexAlgebra::weight(b); });
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        col_.emplace(order[i], i);
        col_weight_.push_back(VertexAlgebra::weight(order[i]));
    }
    std::vector<SparseRow<Rational>> rows;
    auto add = [&](const VState& g) {
        if (g.is_zero()) return;
        rows.push_back(row_of(g));
        ++generator_count_;
    };
    for (const auto& a : states) {
        if (VertexAlgebra::weight(a) + 1 > top) continue;
        VState s = Vector::basis(a);
        add(v.translate(s) + v.energy(s) * h.pow(1));
    }
    for (const auto& a : states)
        for (const auto& b : states) {
            if (VertexAlgebra::weight(a) + VertexAlgebra::weight(b) + 2 * p + 1 > top) continue;
            add(v.zhu_mode(Vector::basis(a), Vector::basis(b), -2 * p - 2, p, h));
        }
    // sparse rows first keeps fill-in down during elimination
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    for (auto& r : rows) ech_.insert(std::move(r));
}

SparseRow<Rational> JSpan::row_of(const VState& x) const {
    std::map<Symbol, Rational> point = specialization_point(0);
    point[Symbol::hbar] = hbar_;
    SparseRow<Rational> row;
    for (const auto& [b, c] : x.terms()) {
        auto it = col_.find(b);
        if (it == col_.end()) throw TruncationError("state beyond the J span cutoff");
        Rational q = c.eval_at(point).constant_value();
        if (q != 0) row[it->second] = q;
    }
    return row;
}

Membership JSpan::contains(const VState& x) const {
    if (v_.max_weight(x) > cutoff_) return Membership::undecided;
    return ech_.contains(row_of(x)) ? Membership::in : Membership::not_in;
}

std::size_t JSpan::rank_upto(long w) const {
    std::size_t n = 0;
    for (int c : ech_.pivot_columns())
        if (col_weight_[c] <= w) ++n;
    return n;
}

std::shared_ptr<const ModeAlgebra> specialize_centrals(const ModeAlgebra& alg, int point) {
    const auto at = specialization_point(point);
    std::vector<PolyScalar> values;
    for (const auto& z : alg.central_values()) values.push_back(z.eval_at(at));
    return std::make_shared<ModeAlgebra>(alg.spec(), std::move(values));
}

std::unique_ptr<JSpan> stable_j_span(const VertexAlgebra& v, long p, long cutoff, const Rational& hbar, long min_slack, long max_slack) {
    auto cur = std::make_unique<JSpan>(v, p, cutoff, hbar, min_slack);
    for (long s = min_slack + 1; s <= max_slack; ++s) {
        auto next = std::make_unique<JSpan>(v, p, cutoff, hbar, s);
        const bool same = next->rank_upto(cutoff) == cur->rank_upto(cutoff);
        cur = std::move(next);
        if (same) break;
    }
    return cur;
}

// Generators of J_p of weight at most w, as listed in the span definition.
std::vector<std::pair<std::string, VState>> j_generators(const VertexAlgebra& v, long p, long w, const Hbar& h) {
    std::vector<std::pair<std::string, VState>> out;
    auto states = v.basis_upto(w);
    for (const auto& a : states) {
        if (VertexAlgebra::weight(a) + 1 > w) continue;
        VState s = Vector::basis(a);
        out.emplace_back("(T+hH) " + v.render(a), v.translate(s) + v.energy(s) * h.pow(1));
    }
    for (const auto& a : states)
        for (const auto& b : states) {
            if (VertexAlgebra::weight(a) + VertexAlgebra::weight(b) + 2 * p + 1 > w) continue;
            VState g = v.zhu_mode(Vector::basis(a), Vector::basis(b), -2 * p - 2, p, h);
            if (!g.is_zero()) out.emplace_back("(" + v.render(a) + ")_[" + std::to_string(-2 * p - 2) + "] " + v.render(b), g);
        }
    return out;
}

}  // namespace zhukit
