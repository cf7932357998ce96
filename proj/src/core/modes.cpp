// SPDX-License-Identifier: Apache-2.0
#include "modes.hpp"

#include <mutex>
#include <numeric>

namespace zhukit {

Vector Vector::basis(Basis b, PolyScalar coeff) {
    Vector v;
    v.add(b, coeff);
    return v;
}

PolyScalar Vector::coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? PolyScalar() : it->second;
}

void Vector::add(const Basis& b, const PolyScalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(b, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Vector& Vector::operator+=(const Vector& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

Vector& Vector::add_scaled(const Vector& o, const PolyScalar& s) {
    if (s.is_zero()) return *this;
    for (const auto& [b, c] : o.terms_) add(b, c * s);
    return *this;
}

Vector Vector::operator*(const PolyScalar& s) const {
    Vector r;
    if (s.is_zero()) return r;
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, c * s);
    return r;
}

Vector Vector::eval_at(const std::map<Symbol, Rational>& values) const {
    Vector r;
    for (const auto& [b, c] : terms_) r.add(b, c.eval_at(values));
    return r;
}

ModeAlgebra::ModeAlgebra(LcaSpec spec) : spec_(std::move(spec)) {
    for (const auto& z : spec_.centrals) central_values_.push_back(z.value);
    for (const auto& g : spec_.generators) denom_ = std::lcm(denom_, static_cast<int>(mpz_get_si(eps(g.twist()).get_den_mpz_t())));
}

ModeAlgebra::ModeAlgebra(LcaSpec spec, std::vector<PolyScalar> central_values) : ModeAlgebra(std::move(spec)) {
    if (central_values.size() != spec_.centrals.size()) throw PreconditionError("wrong number of central values");
    central_values_ = std::move(central_values);
}

std::int32_t ModeAlgebra::scale(const Rational& mode) const {
    Rational s = mode * denom_;
    s.canonicalize();
    if (!is_integer(s)) throw PreconditionError("mode " + to_string(mode) + " is not a multiple of 1/" + std::to_string(denom_));
    long v = to_long(s);
    if (v > (1 << 22) || v < -(1 << 22)) throw PreconditionError("mode out of range: " + to_string(mode));
    return static_cast<std::int32_t>(v);
}

ModeOp ModeAlgebra::op(int gen, const Rational& mode) const {
    if (gen < 0 || gen >= num_generators()) throw PreconditionError("unknown generator index");
    ModeOp o{scale(mode), static_cast<std::uint16_t>(gen)};
    if (!valid(o))
        throw PreconditionError("mode " + to_string(mode) + " of " + spec_.generators[gen].id + " is not in its coset " +
                                to_string(eps(spec_.generators[gen].twist())) + " + Z");
    return o;
}

bool ModeAlgebra::valid(const ModeOp& o) const {
    return is_integer(Rational(mode_value(o) - eps(spec_.generators[o.gen].twist())));
}

const BracketResult& ModeAlgebra::bracket(const ModeOp& a, const ModeOp& b) const {
    const std::uint64_t key = (static_cast<std::uint64_t>(a.gen) << 56) | (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a.mode) & 0xffffff) << 32) |
                              (static_cast<std::uint64_t>(b.gen) << 24) | (static_cast<std::uint64_t>(static_cast<std::uint32_t>(b.mode) & 0xffffff));
    {
        std::shared_lock lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    auto res = std::make_unique<BracketResult>();
    auto row = spec_.table.find({a.gen, b.gen});
    if (row != spec_.table.end()) {
        const Rational m = mode_value(a);
        const Rational N = mode_value(a) + mode_value(b);
        std::map<ModeOp, PolyScalar> acc;
        for (const auto& [j, elem] : row->second) {
            Rational bj = binom_q(m + weight(a.gen) - 1, j);
            if (bj == 0) continue;
            for (const auto& [key2, coeff] : elem.gens()) {
                auto [g, t] = key2;
                // (T^t g)_N = prod_{i<t} (-(N + Delta_g + i)) g_N
                Rational f = bj;
                for (int i = 0; i < t; ++i) f *= -(N + weight(g) + i);
                if (f == 0) continue;
                ModeOp out{scale(N), static_cast<std::uint16_t>(g)};
                acc[out] += coeff * PolyScalar(f);
            }
            if (N == 0)
                for (const auto& [z, coeff] : elem.centrals()) res->scalar += coeff * central_values_[z] * PolyScalar(bj);
        }
        for (auto& [o, c] : acc)
            if (!c.is_zero()) res->ops.emplace_back(o, std::move(c));
    }
    std::unique_lock lock(mu_);
    auto [it, fresh] = cache_.try_emplace(key, std::move(res));
    return *it->second;
}

std::string ModeAlgebra::render(const ModeOp& o) const {
    return spec_.generators[o.gen].id + "[" + to_string(mode_value(o)) + "]";
}

std::string ModeAlgebra::render(const Word& w) const {
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += ' ';
        s += render(w[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

InducedSpace::InducedSpace(std::shared_ptr<const ModeAlgebra> alg, std::unique_ptr<SpacePolicy> policy)
    : alg_(std::move(alg)), policy_(std::move(policy)) {}

long InducedSpace::word_weight(const Word& w) {
    long s = 0;
    for (const auto& o : w) s -= o.mode;
    return s;
}

long InducedSpace::vanish_bound(const Basis& b) const {
    long s = policy_->base_cap();
    for (const auto& o : b.word)
        if (o.mode < 0) s -= o.mode;
    return s;
}

std::size_t InducedSpace::cache_size() const {
    std::shared_lock lock(mu_);
    std::size_t n = 0;
    for (const auto& [b, m] : cache_) n += m.size();
    return n;
}

const Vector& InducedSpace::apply(const ModeOp& op, const Basis& b) const {
    const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(op.mode)) << 16) | op.gen;
    {
        std::shared_lock lock(mu_);
        auto it = cache_.find(b);
        if (it != cache_.end()) {
            auto jt = it->second.find(key);
            if (jt != it->second.end()) return *jt->second;
        }
    }
    auto res = std::make_unique<Vector>(compute(op, b));
    std::unique_lock lock(mu_);
    auto [jt, fresh] = cache_[b].try_emplace(key, std::move(res));
    return *jt->second;
}

Vector InducedSpace::apply(const ModeOp& op, const Vector& v) const {
    Vector r;
    for (const auto& [b, c] : v.terms()) r.add_scaled(apply(op, b), c);
    return r;
}

Vector InducedSpace::apply_word(const Word& w, const Vector& v) const {
    Vector r = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply(*it, r);
    return r;
}

Vector InducedSpace::compute(const ModeOp& op, const Basis& b) const {
    const ModeAlgebra& A = *alg_;
    const Word& w = b.word;
    const bool free = policy_->is_free(op);
    if (w.empty()) {
        if (!free) return policy_->act_base(op, b.base);
        Basis nb{{op}, b.base};
        return policy_->word_survives(nb.word) ? Vector::basis(nb) : Vector();
    }
    const ModeOp& w1 = w.front();
    if (free && (op < w1 || (op == w1 && !A.odd(op)))) {
        Basis nb;
        nb.base = b.base;
        nb.word.reserve(w.size() + 1);
        nb.word.push_back(op);
        nb.word.insert(nb.word.end(), w.begin(), w.end());
        return policy_->word_survives(nb.word) ? Vector::basis(std::move(nb)) : Vector();
    }
    Basis rest{Word(w.begin() + 1, w.end()), b.base};
    Vector r;
    const BracketResult& br = A.bracket(op, w1);
    if (op == w1) {
        // odd op squared: op op = [op, op] / 2
        for (const auto& [o, c] : br.ops) r.add_scaled(apply(o, rest), c * Rational(1, 2));
        r.add(rest, br.scalar * Rational(1, 2));
        return r;
    }
    const Vector& inner = apply(op, rest);
    const PolyScalar sign(A.parity_sign(op, w1));
    for (const auto& [bb, c] : inner.terms()) r.add_scaled(apply(w1, bb), c * sign);
    for (const auto& [o, c] : br.ops) r.add_scaled(apply(o, rest), c);
    r.add(rest, br.scalar);
    return r;
}

}  // namespace zhukit
