// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "suites.hpp"
#include "vertex.hpp"

namespace zhukit {

// Square matrix over scalars; column j is the image of basis vector j.
using Matrix = std::vector<std::vector<PolyScalar>>;

struct ModuleAction {
    std::string name;
    std::string word;  // expression as written, e.g. "L[-1] L[1]"
    UEElement value;   // normal form in Z_p
    Matrix matrix;
};

struct ZhuModuleInput {
    long p = 0;
    int dimension = 0;
    std::vector<std::string> labels;
    std::vector<ModuleAction> actions;
    std::vector<std::string> relations;  // Z_p relations among the action words that were checked
};

struct ModuleActionSpec {
    std::string name;
    std::string word;
    Matrix matrix;
};

// Builds and validates a module input. Throws SchemaError when a matrix has the wrong shape or
// when the matrices violate a relation among the words found at the given relation cutoff.
ZhuModuleInput make_zhu_module(std::shared_ptr<const ModeAlgebra> alg, long p, std::vector<std::string> labels,
                               const std::vector<ModuleActionSpec>& actions, int relation_cutoff = 4);
// zhumod/1 text; the "algebra" field is informational and not checked here.
ZhuModuleInput load_zhu_module(std::string_view text, std::shared_ptr<const ModeAlgebra> alg, int relation_cutoff = 4);
std::string dump_zhu_module(const ZhuModuleInput& n);

// One-dimensional level-0 input: zero modes of generators act by the given scalars (missing ones by 0).
// For the presets: virasoro gets L[0] -> lambda, current_sl2 the trivial module.
ZhuModuleInput scalar_module(std::shared_ptr<const ModeAlgebra> alg, const std::vector<std::pair<std::string, PolyScalar>>& zero_modes);
ZhuModuleInput default_module(std::shared_ptr<const ModeAlgebra> alg);

// ind N: negative modes act freely, positive modes kill N, zero modes act through N's matrices.
// Only level-0 inputs can be induced; the depth bounds basis enumeration, the action itself is exact.
class InducedModule {
public:
    InducedModule(std::shared_ptr<const ModeAlgebra> alg, const ZhuModuleInput& n, long depth);

    const ModeAlgebra& algebra() const { return space_.algebra(); }
    const InducedSpace& space() const { return space_; }
    long depth() const { return depth_; }
    int base_dimension() const { return static_cast<int>(zero_.empty() ? 0 : zero_.front().size()); }
    const Matrix& zero_mode_matrix(int g) const { return zero_[g]; }

    Vector base_vector(int i) const { return Vector::basis(Basis{{}, i}); }
    static long degree(const Basis& b) { return InducedSpace::word_weight(b.word); }
    static long max_degree(const Vector& x);  // -1 for zero
    std::vector<Basis> basis_of_degree(long j) const;
    std::vector<Basis> basis_upto(long j) const;
    std::vector<long> dims() const;  // degrees 0..depth

    Vector act(const ModeOp& op, const Vector& x) const;
    Vector field(const VState& a, long n, const Vector& x) const;  // a_(n) x
    Vector mode(const VState& a, long m, const Vector& x) const;   // a_m x, split over homogeneous parts of a
    Vector zero_mode(const VState& a, const Vector& x) const { return mode(a, 0, x); }

    std::string render(const Basis& b) const;
    std::string render(const Vector& x) const;

private:
    std::vector<Matrix> zero_;
    std::vector<std::string> labels_;
    long depth_;
    InducedSpace space_;
    FieldEngine fields_{space_};
};

// BI(a,b;m,k;n) applied to x; zero on every module built above.
Vector borcherds_defect(const InducedModule& M, const VertexAlgebra& V, const VState& a, const VState& b, long m, long k, long n, const Vector& x);
// (a *_p b)_0 x - a_0 b_0 x at hbar = 1
Vector zhu_action_defect(const InducedModule& M, const VertexAlgebra& V, const VState& a, const VState& b, long p, const Vector& x);
// a_{-k} b_k x - sum_{m=0}^{p-k} binom(-p-1-k, m) (a_[-p-1-k-m] b)_0 x at hbar = 1, for 0 <= k <= p
Vector akbk_defect(const InducedModule& M, const VertexAlgebra& V, const VState& a, const VState& b, long k, long p, const Vector& x);
// ((T + Delta_a) a)_0 x
Vector thann_defect(const InducedModule& M, const VertexAlgebra& V, const VState& a, const Vector& x);
// L_0 x - (j + N(L_0)) x on a basis vector of degree j, using generator g as L
Vector l0_defect(const InducedModule& M, int g, const Basis& x);

struct ComposeResult {
    VState c;
    bool decided = true;
    bool verified = false;
    std::size_t vectors_checked = 0;
    std::string note;
};
// A state c with c_{m+k} = a_m b_k on all basis vectors of degree <= check_depth, built by descending
// induction from mbar = kbar = check_depth + 1.
ComposeResult compose_modes(const InducedModule& M, const VertexAlgebra& V, const VState& a, const VState& b, long m, long k, long check_depth);

struct ModuleSuiteOptions {
    std::vector<long> ps{0, 1, 2};
    long state_weight = 4;  // a, b range over basis states up to this weight
    long mode_range = 3;    // |m|, |k| in the Borcherds grid
    long n_lo = -3, n_hi = 2;
    std::optional<int> conformal;  // generator whose zero mode is checked against the grading
    int jobs = 1;
};

// Module-side checks on M; case records use suite "modules".
std::vector<CaseRecord> verify_modules(const InducedModule& M, const VertexAlgebra& V, const ModuleSuiteOptions& opt);

}  // namespace zhukit
