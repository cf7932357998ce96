// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "scalars.hpp"
#include "twist.hpp"

namespace zhukit {

struct Generator {
    std::string id;
    Rational weight;
    bool odd = false;
    CosetZ degree;

    TwistData twist() const { return TwistData{degree, weight}; }
};

struct Central {
    std::string id;
    PolyScalar value;  // what the central element is specialized to, e.g. c
};

// Finite combination of T^t g (generators) and central elements; T kills centrals.
class LcaElement {
public:
    using GenKey = std::pair<int, int>;  // (generator, T power)

    static LcaElement generator(int g, int tpow = 0, PolyScalar coeff = 1);
    static LcaElement central(int z, PolyScalar coeff = 1);

    const std::map<GenKey, PolyScalar>& gens() const { return gens_; }
    const std::map<int, PolyScalar>& centrals() const { return centrals_; }
    bool is_zero() const { return gens_.empty() && centrals_.empty(); }

    void add_gen(int g, int tpow, const PolyScalar& coeff);
    void add_central(int z, const PolyScalar& coeff);
    LcaElement& operator+=(const LcaElement& o);
    LcaElement operator*(const PolyScalar& s) const;
    LcaElement operator-() const { return *this * PolyScalar(-1); }
    LcaElement translate(int times = 1) const;
    bool operator==(const LcaElement& o) const { return gens_ == o.gens_ && centrals_ == o.centrals_; }

private:
    std::map<GenKey, PolyScalar> gens_;
    std::map<int, PolyScalar> centrals_;
};

struct LcaSpec {
    std::string name;
    std::vector<Generator> generators;
    std::vector<Central> centrals;
    // (a, b) -> j -> a_(j) b
    std::map<std::pair<int, int>, std::map<int, LcaElement>> table;

    int generator_index(std::string_view id) const;  // -1 if absent
    int central_index(std::string_view id) const;
    const LcaElement* bracket_entry(int a, int b, int j) const;
    int parity_sign(int a, int b) const { return generators[a].odd && generators[b].odd ? -1 : 1; }
    bool untwisted() const;  // every degree coset is [0] and every weight is an integer

    std::string render(const LcaElement& e) const;
    void validate() const;  // weight, degree and parity bookkeeping of the table; throws SchemaError
};

// Polynomial in lambda (ordinary powers) with LcaElement coefficients.
using LambdaPoly = std::map<int, LcaElement>;
// Polynomial in (lambda, mu).
using LambdaMuPoly = std::map<std::pair<int, int>, LcaElement>;

LambdaPoly lambda_bracket(const LcaSpec& spec, const LcaElement& a, const LcaElement& b);
std::string render_lambda(const LcaSpec& spec, const LambdaPoly& p);

struct AxiomDefect {
    std::string axiom;
    std::vector<std::string> inputs;
    std::string defect;
};

struct AxiomReport {
    long checked = 0;
    std::vector<AxiomDefect> defects;
    bool ok() const { return defects.empty(); }
};

AxiomReport check_axioms(const LcaSpec& spec);

// Fills b_(n) a from a_(n) b by skew-symmetry, for every ordered pair (a, b) with a <= b.
LcaSpec complete_by_skew(LcaSpec spec);
// Recomputes every entry from its mirror by the skew formula.
LcaSpec skew_table(const LcaSpec& spec);

LcaSpec preset(std::string_view name);
LcaSpec load_lca_json(std::string_view text);
std::string dump_lca_json(const LcaSpec& spec);

}  // namespace zhukit
