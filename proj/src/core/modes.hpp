// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lca.hpp"

namespace zhukit {

// a_n in weight indexing. The mode is stored scaled by the algebra's mode denominator.
struct ModeOp {
    std::int32_t mode = 0;
    std::uint16_t gen = 0;

    bool operator==(const ModeOp& o) const { return mode == o.mode && gen == o.gen; }
    bool operator!=(const ModeOp& o) const { return !(*this == o); }
    // PBW order: mode nondecreasing, ties by generator index
    bool operator<(const ModeOp& o) const { return mode != o.mode ? mode < o.mode : gen < o.gen; }
};

using Word = std::vector<ModeOp>;

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = w.size();
        for (const auto& op : w) h = h * 0x100000001b3ull ^ (static_cast<std::size_t>(static_cast<std::uint32_t>(op.mode)) << 16 | op.gen);
        return h;
    }
};

// Basis element of an induced space: a sorted word of free modes applied to a base vector.
struct Basis {
    Word word;
    int base = 0;

    bool operator==(const Basis& o) const { return base == o.base && word == o.word; }
    bool operator<(const Basis& o) const { return base != o.base ? base < o.base : word < o.word; }
};

struct BasisHash {
    std::size_t operator()(const Basis& b) const { return WordHash{}(b.word) * 31u + static_cast<std::size_t>(b.base); }
};

// Finite linear combination of basis elements with scalar coefficients, kept in canonical order.
class Vector {
public:
    using Map = std::map<Basis, PolyScalar>;

    Vector() = default;
    static Vector basis(Basis b, PolyScalar coeff = 1);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    PolyScalar coefficient(const Basis& b) const;

    void add(const Basis& b, const PolyScalar& coeff);
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& add_scaled(const Vector& o, const PolyScalar& s);
    Vector operator*(const PolyScalar& s) const;
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    bool operator==(const Vector& o) const { return terms_ == o.terms_; }
    bool operator!=(const Vector& o) const { return !(*this == o); }
    Vector eval_at(const std::map<Symbol, Rational>& values) const;

private:
    Map terms_;
};

struct BracketResult {
    std::vector<std::pair<ModeOp, PolyScalar>> ops;
    PolyScalar scalar;
};

// The mode Lie algebra Lie(R) with central elements specialized to scalars.
class ModeAlgebra {
public:
    explicit ModeAlgebra(LcaSpec spec);
    ModeAlgebra(LcaSpec spec, std::vector<PolyScalar> central_values);

    const LcaSpec& spec() const { return spec_; }
    const std::vector<PolyScalar>& central_values() const { return central_values_; }
    int denom() const { return denom_; }
    int num_generators() const { return static_cast<int>(spec_.generators.size()); }

    Rational mode_value(const ModeOp& op) const { return Rational(op.mode, denom_); }
    Rational mode_value_scaled(long scaled) const { return Rational(scaled, denom_); }
    // Scaled integer representation of a rational mode; throws if it is not a multiple of 1/denom.
    std::int32_t scale(const Rational& mode) const;
    ModeOp op(int gen, const Rational& mode) const;
    // checks mode lies in the generator's coset [eps]
    bool valid(const ModeOp& op) const;
    bool odd(const ModeOp& op) const { return spec_.generators[op.gen].odd; }
    int parity_sign(const ModeOp& a, const ModeOp& b) const { return odd(a) && odd(b) ? -1 : 1; }
    const Rational& weight(int gen) const { return spec_.generators[gen].weight; }

    // [a_m, b_k] = sum_j binom(m + Delta_a - 1, j) (a_(j) b)_{m+k}
    const BracketResult& bracket(const ModeOp& a, const ModeOp& b) const;

    std::string render(const ModeOp& op) const;
    std::string render(const Word& w) const;  // "L[-1] L[0]^2 L[1]"

private:
    LcaSpec spec_;
    std::vector<PolyScalar> central_values_;
    int denom_ = 1;
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<std::uint64_t, std::unique_ptr<BracketResult>> cache_;
};

// Policy deciding which modes stay in words and how the rest act on base vectors.
class SpacePolicy {
public:
    virtual ~SpacePolicy() = default;
    virtual bool is_free(const ModeOp& op) const = 0;
    // action of a non-free mode on a base vector; result words may be non-empty
    virtual Vector act_base(const ModeOp& op, int base) const = 0;
    // sorted words violating this are zero in the space (used for Z_p quotients)
    virtual bool word_survives(const Word&) const { return true; }
    // largest scaled mode that can act nontrivially on a base vector
    virtual long base_cap() const = 0;
};

// Left module of U(Lie R) spanned by sorted free words over base vectors; normal ordering is memoized.
class InducedSpace {
public:
    InducedSpace(std::shared_ptr<const ModeAlgebra> alg, std::unique_ptr<SpacePolicy> policy);

    const ModeAlgebra& algebra() const { return *alg_; }
    std::shared_ptr<const ModeAlgebra> algebra_ptr() const { return alg_; }
    const SpacePolicy& policy() const { return *policy_; }

    const Vector& apply(const ModeOp& op, const Basis& b) const;
    Vector apply(const ModeOp& op, const Vector& v) const;
    // applies the word right to left: w[0] (w[1] (... v))
    Vector apply_word(const Word& w, const Vector& v) const;

    // modes above this (scaled) kill the basis vector
    long vanish_bound(const Basis& b) const;
    // degree lowered by the word, i.e. -sum of modes (scaled)
    static long word_weight(const Word& w);
    std::size_t cache_size() const;

private:
    Vector compute(const ModeOp& op, const Basis& b) const;

    std::shared_ptr<const ModeAlgebra> alg_;
    std::unique_ptr<SpacePolicy> policy_;
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Basis, std::unordered_map<std::uint64_t, std::unique_ptr<Vector>>, BasisHash> cache_;
};

}  // namespace zhukit
