// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "enveloping.hpp"

namespace zhukit {

// States of V(R) are vectors over sorted creation words applied to the vacuum (base 0).
using VState = Vector;

// hbar either kept as the Laurent variable h or specialized to a nonzero rational.
struct Hbar {
    std::optional<Rational> value;

    static Hbar symbolic() { return {}; }
    static Hbar at(const Rational& v);
    PolyScalar pow(long k) const;
    bool is_symbolic() const { return !value.has_value(); }
    std::string str() const;
};

// Action of creation words (states of V(R)) on a space spanned by an InducedSpace whose basis
// vectors have degree = weight of their word (base vectors at degree 0). The recursion is the
// normal-ordered product formula, so it holds on the vacuum module and on positive-energy modules.
class FieldEngine {
public:
    explicit FieldEngine(const InducedSpace& space) : space_(space) {}

    ModeOp field_mode(int g, long n) const;  // g_(n) as a weight-indexed mode
    const Vector& word_field(const Word& a, long n, const Basis& v) const;
    Vector apply(const Vector& a, long n, const Vector& x) const;  // a_(n) x
    std::size_t cache_size() const;

private:
    Vector compute(const Word& a, long n, const Basis& v) const;
    int word_parity(const Word& w) const;

    const InducedSpace& space_;
    struct Key {
        Word a;
        long n;
        Basis v;
        bool operator==(const Key& o) const { return n == o.n && a == o.a && v == o.v; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return WordHash{}(k.a) * 1000003u ^ BasisHash{}(k.v) * 31u ^ static_cast<std::size_t>(k.n); }
    };
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Key, std::unique_ptr<Vector>, KeyHash> cache_;
};

class VertexAlgebra {
public:
    // requires every degree coset [0] and integer weights
    explicit VertexAlgebra(std::shared_ptr<const ModeAlgebra> alg);

    const ModeAlgebra& algebra() const { return space_.algebra(); }
    std::shared_ptr<const ModeAlgebra> algebra_ptr() const { return space_.algebra_ptr(); }
    const InducedSpace& space() const { return space_; }

    VState vacuum() const { return Vector::basis(Basis{}); }
    VState generator(int g) const;  // g_(-1) vac
    ModeOp field_mode(int g, long n) const;  // g_(n) as a weight-indexed mode
    VState apply_field_mode(int g, long n, const VState& b) const;

    static long weight(const Basis& b) { return InducedSpace::word_weight(b.word); }
    int parity(const Basis& b) const;  // 0 even, 1 odd
    std::optional<long> homogeneous_weight(const VState& a) const;
    long max_weight(const VState& a) const;  // -1 for zero
    // basis states of weight exactly w / at most w, in (weight, word) order
    std::vector<Basis> basis_of_weight(long w) const;
    std::vector<Basis> basis_upto(long w) const;

    VState nth_product(const VState& a, const VState& b, long n) const;
    VState translate(const VState& a) const;
    VState energy(const VState& a) const;

    VState zhu_mode(const VState& a, const VState& b, long n, long p, const Hbar& h) const;
    VState star(const VState& a, const VState& b, long p, const Hbar& h) const;
    VState hbar_bracket(const VState& a, const VState& b, long p, const Hbar& h) const;  // sum binom(-p-1, j) h^j a_[j] b
    VState hbar_bracket_direct(const VState& a, const VState& b, const Hbar& h) const;  // sum binom(gamma-1, j) h^j a_(j) b

    std::string render(const VState& a) const;
    std::string render(const Basis& b) const;
    std::size_t cache_size() const;

private:
    InducedSpace space_;
    FieldEngine fields_{space_};
};

// Row-reduced span of the generators of J_p at a specialized hbar, filtered by weight.
class JSpan {
public:
    // generators are taken up to weight cutoff + slack; pivots favour high-weight columns
    JSpan(const VertexAlgebra& v, long p, long cutoff, const Rational& hbar, long slack);

    Membership contains(const VState& x) const;
    long p() const { return p_; }
    long cutoff() const { return cutoff_; }
    long slack() const { return slack_; }
    const Rational& hbar() const { return hbar_; }
    std::size_t rank() const { return ech_.rank(); }
    std::size_t rank_upto(long w) const;
    std::size_t generator_count() const { return generator_count_; }

private:
    SparseRow<Rational> row_of(const VState& x) const;

    const VertexAlgebra& v_;
    long p_, cutoff_, slack_;
    Rational hbar_;
    std::map<Basis, int> col_;
    std::vector<long> col_weight_;
    Echelon<Rational> ech_;
    std::size_t generator_count_ = 0;
};

// Named generators of J_p of weight at most w: (T+hH)a and a_[-2p-2] b.
std::vector<std::pair<std::string, VState>> j_generators(const VertexAlgebra& v, long p, long w, const Hbar& h);

// Copy of the algebra with central values evaluated at a specialization point (see specialization_point).
std::shared_ptr<const ModeAlgebra> specialize_centrals(const ModeAlgebra& alg, int point = 0);

// Builds J_p with increasing slack until the part up to the cutoff stops growing.
std::unique_ptr<JSpan> stable_j_span(const VertexAlgebra& v, long p, long cutoff, const Rational& hbar, long min_slack = 2, long max_slack = 6);

}  // namespace zhukit
