// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "modes.hpp"

namespace zhukit {

// Elements of U(Lie R) (or of a Z_p quotient) are vectors over the single base vector 0.
using UEElement = Vector;

// Three fixed generic specialization points for c, k (and the other symbols) used by linear algebra.
std::map<Symbol, Rational> specialization_point(int i);
inline constexpr int kSpecializationPoints = 3;

long word_degree(const Word& w);  // scaled sum of modes
long positive_part(const Word& w);  // scaled sum of positive modes = largest suffix sum of a sorted word
bool suffix_killed(const Word& w, long p_scaled);
long element_degree(const UEElement& x);  // throws PreconditionError when inhomogeneous
std::size_t filtration(const UEElement& x);  // longest word

// U(Lie R), or U(Lie R)/(U(Lie R) U(Lie R)_{>p}) viewed as a left module when a level is given.
class Enveloping {
public:
    explicit Enveloping(std::shared_ptr<const ModeAlgebra> alg, std::optional<long> level = std::nullopt);

    const ModeAlgebra& algebra() const { return space_.algebra(); }
    std::shared_ptr<const ModeAlgebra> algebra_ptr() const { return space_.algebra_ptr(); }
    std::optional<long> level() const { return level_; }
    const InducedSpace& space() const { return space_; }

    UEElement one() const { return Vector::basis(Basis{}); }
    UEElement monomial(const Word& w, const PolyScalar& coeff = 1) const;  // w must be sorted
    UEElement pbw_normalize(const Word& w, const PolyScalar& coeff = 1) const;
    UEElement multiply(const UEElement& x, const UEElement& y) const;
    std::string render(const UEElement& x) const;

private:
    std::optional<long> level_;
    InducedSpace space_;
};

UEElement bracket_modes(const ModeAlgebra& alg, const ModeOp& a, const ModeOp& b);
// Normal form in Z_p: deletes sorted monomials with a suffix of mode sum > p. Input must have degree 0.
UEElement zp_reduce(const Enveloping& u, const UEElement& x, long p);
UEElement zp_multiply(const Enveloping& zp, const UEElement& x, const UEElement& y);
std::vector<Word> zp_basis(const ModeAlgebra& alg, long p, int cutoff);
// Sorted words of length <= max_len with every (scaled) mode in [lo, hi], sorted by (length, lex).
std::vector<Word> sorted_words(const ModeAlgebra& alg, long lo, long hi, int max_len);

struct ParsedTerm {
    PolyScalar coeff;
    Word word;  // in the order written
};
// Micro-grammar: "2 L[-1] L[0]^2 L[1] - 1/2*c e[0] + k", fractional modes allowed ("G[-1/2]").
std::vector<ParsedTerm> parse_expression(const ModeAlgebra& alg, std::string_view text);
UEElement evaluate(const Enveloping& u, const std::vector<ParsedTerm>& terms);

enum class Membership { in, not_in, undecided };
std::string_view membership_name(Membership m);

// Spans (U U_{>p})_0 by normal-ordering products u v (sorted monomials, deg v > p) of bounded length and
// mode window, with the symbols specialized, and tests membership by row reduction.
class IdealOracle {
public:
    IdealOracle(std::shared_ptr<const ModeAlgebra> alg, long p, int length_cutoff, long mode_window, int point = 0);
    Membership test(const UEElement& x) const;
    std::size_t rank() const { return ech_.rank(); }
    std::size_t products() const { return products_; }

private:
    SparseRow<Rational> row_of(const UEElement& x, bool extend) const;

    std::shared_ptr<const ModeAlgebra> alg_;
    long p_;
    int length_cutoff_;
    long window_;
    std::map<Symbol, Rational> point_;
    mutable ColumnIndex<Word> cols_;
    Echelon<Rational> ech_;
    std::size_t products_ = 0;
};

Membership ideal_membership(std::shared_ptr<const ModeAlgebra> alg, const UEElement& x, long p, int length_cutoff, long mode_window);

struct ZpGenerator {
    std::string name;
    UEElement value;  // Z_p normal form
};

struct Relation {
    std::vector<std::pair<std::vector<int>, PolyScalar>> terms;  // (word over generators, coefficient), leading first
    std::string text;
};

struct RelationSearch {
    std::vector<Relation> relations;
    std::size_t words_evaluated = 0;
    bool symbolic = false;  // true when the specializations disagreed and the symbolic elimination decided
    std::vector<std::string> notes;
};

RelationSearch find_relations(const Enveloping& zp, const std::vector<ZpGenerator>& gens, int cutoff);
std::string render_generator_word(const std::vector<ZpGenerator>& gens, const std::vector<int>& w);

struct QuotientDims {
    std::vector<long> dims;
    int slack = 0;
    bool converged = false;
};
// dim U(g_0)_{<=d} / (two-sided ideal generated by gens) for d = 0..max_filtration.
QuotientDims quotient_dim_sequence(std::shared_ptr<const ModeAlgebra> alg, const std::vector<UEElement>& gens, int max_filtration);

}  // namespace zhukit
