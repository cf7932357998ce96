#include "doctest.h"
#include "modes.hpp"

using namespace zhukit;

namespace {

class AllFree : public SpacePolicy {
public:
    bool is_free(const ModeOp&) const override { return true; }
    Vector act_base(const ModeOp&, int) const override { return {}; }
    long base_cap() const override { return 0; }
};

std::shared_ptr<const ModeAlgebra> algebra(const char* name) { return std::make_shared<ModeAlgebra>(preset(name)); }

PolyScalar scalar_of(const BracketResult& r) { return r.scalar; }

}  // namespace

TEST_CASE("virasoro mode brackets") {
    auto A = algebra("virasoro");
    const BracketResult& r = A->bracket(A->op(0, 2), A->op(0, -2));
    REQUIRE(r.ops.size() == 1);
    CHECK(r.ops[0].first == A->op(0, 0));
    CHECK(r.ops[0].second == PolyScalar(4));
    CHECK(scalar_of(r) == PolyScalar::symbol(Symbol::c) * Rational(1, 2));

    // [L_m, L_n] = (m - n) L_{m+n} + c/12 (m^3 - m) delta
    for (int m = -4; m <= 4; ++m)
        for (int n = -4; n <= 4; ++n) {
            const BracketResult& b = A->bracket(A->op(0, m), A->op(0, n));
            PolyScalar lin = b.ops.empty() ? PolyScalar() : b.ops[0].second;
            CHECK(lin == PolyScalar(m - n));
            PolyScalar expect = m + n == 0 ? PolyScalar::symbol(Symbol::c) * Rational(m * m * m - m, 12) : PolyScalar();
            CHECK(b.scalar == expect);
        }
}

TEST_CASE("sl2 mode brackets") {
    auto A = algebra("current_sl2");
    const BracketResult& r = A->bracket(A->op(0, 1), A->op(2, -1));
    REQUIRE(r.ops.size() == 1);
    CHECK(r.ops[0].first == A->op(1, 0));
    CHECK(r.scalar == PolyScalar::symbol(Symbol::k));
    CHECK(A->bracket(A->op(1, 1), A->op(1, -1)).scalar == PolyScalar::symbol(Symbol::k) * Rational(2));
    CHECK(A->bracket(A->op(1, 1), A->op(1, 1)).scalar.is_zero());
    CHECK(A->render(A->op(2, -3)) == "f[-3]");
}

TEST_CASE("normal ordering in the enveloping algebra") {
    SUBCASE("virasoro") {
        auto A = algebra("virasoro");
        InducedSpace U(A, std::make_unique<AllFree>());
        Vector v = U.apply_word({A->op(0, 1), A->op(0, -1)}, Vector::basis(Basis{}));
        Vector expect = Vector::basis(Basis{{A->op(0, -1), A->op(0, 1)}}) + Vector::basis(Basis{{A->op(0, 0)}}, 2);
        CHECK(v == expect);
    }
    SUBCASE("sl2") {
        auto A = algebra("current_sl2");
        InducedSpace U(A, std::make_unique<AllFree>());
        Vector v = U.apply_word({A->op(2, 1), A->op(0, -1)}, Vector::basis(Basis{}));
        Vector expect = Vector::basis(Basis{{A->op(0, -1), A->op(2, 1)}}) - Vector::basis(Basis{{A->op(1, 0)}}) +
                        Vector::basis(Basis{}, PolyScalar::symbol(Symbol::k));
        CHECK(v == expect);
    }
}

TEST_CASE("normal ordering is associative and respects the bracket") {
    auto A = algebra("virasoro");
    InducedSpace U(A, std::make_unique<AllFree>());
    const Vector one = Vector::basis(Basis{});
    std::vector<ModeOp> ops;
    for (int m = -2; m <= 2; ++m) ops.push_back(A->op(0, m));
    for (const auto& a : ops)
        for (const auto& b : ops)
            for (const auto& x : ops) {
                // a b x - b a x = [a, b] x
                Vector lhs = U.apply_word({a, b, x}, one) - U.apply_word({b, a, x}, one);
                const BracketResult& br = A->bracket(a, b);
                Vector rhs = Vector::basis(Basis{{x}}, br.scalar);
                for (const auto& [o, c] : br.ops) rhs.add_scaled(U.apply_word({o, x}, one), c);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("fractional modes need the right coset") {
    LcaSpec s;
    s.name = "fermion";
    s.generators = {{"psi", Rational(1, 2), true, CosetZ()}};
    s.centrals = {{"K", PolyScalar::symbol(Symbol::k)}};
    s.table[{0, 0}][0] = LcaElement::central(0);
    auto A = std::make_shared<ModeAlgebra>(s);
    CHECK(A->denom() == 2);
    CHECK_NOTHROW(A->op(0, Rational(1, 2)));
    CHECK_THROWS_AS(A->op(0, 1), PreconditionError);
    // psi_{1/2} psi_{1/2} = [psi_{1/2}, psi_{1/2}] / 2 = 0 and {psi_{1/2}, psi_{-1/2}} = k
    InducedSpace U(A, std::make_unique<AllFree>());
    ModeOp p = A->op(0, Rational(1, 2)), m = A->op(0, Rational(-1, 2));
    CHECK(U.apply_word({p, p}, Vector::basis(Basis{})).is_zero());
    CHECK(U.apply_word({m, m}, Vector::basis(Basis{})).is_zero());
    Vector v = U.apply_word({p, m}, Vector::basis(Basis{}));
    Vector expect = Vector::basis(Basis{{m, p}}, -1) + Vector::basis(Basis{}, PolyScalar::symbol(Symbol::k));
    CHECK(v == expect);
}
