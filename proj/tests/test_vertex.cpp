#include "doctest.h"
#include "vertex.hpp"

using namespace zhukit;

namespace {

std::shared_ptr<const ModeAlgebra> algebra(const char* name) { return std::make_shared<ModeAlgebra>(preset(name)); }

PolyScalar c_sym() { return PolyScalar::symbol(Symbol::c); }

}  // namespace

TEST_CASE("nth products of generators") {
    VertexAlgebra V(algebra("virasoro"));
    VState L = V.generator(0), vac = V.vacuum();
    CHECK(V.nth_product(L, L, 0) == V.translate(L));
    CHECK(V.nth_product(L, L, 1) == L * PolyScalar(2));
    CHECK(V.nth_product(L, L, 2).is_zero());
    CHECK(V.nth_product(L, L, 3) == vac * (c_sym() * Rational(1, 2)));
    CHECK(V.nth_product(L, L, 4).is_zero());
    for (long n = -3; n <= 3; ++n) CHECK(V.nth_product(vac, L, n) == (n == -1 ? L : VState()));

    VertexAlgebra S(algebra("sl2"));
    CHECK(S.nth_product(S.generator(0), S.generator(2), 0) == S.generator(1));
    CHECK(S.nth_product(S.generator(0), S.generator(2), 1) == S.vacuum() * PolyScalar::symbol(Symbol::k));
}

TEST_CASE("translation and energy") {
    VertexAlgebra V(algebra("virasoro"));
    VState L = V.generator(0);
    CHECK(V.translate(V.vacuum()).is_zero());
    CHECK(V.render(V.translate(L)) == "L(-2) vac");
    CHECK(V.homogeneous_weight(V.translate(L)) == 3);
    CHECK(V.energy(L) == L * PolyScalar(2));
    for (const auto& b : V.basis_upto(6)) {
        VState a = Vector::basis(b);
        CHECK(V.translate(a) == V.nth_product(a, V.vacuum(), -2));
    }
}

TEST_CASE("virasoro state space dimensions") {
    VertexAlgebra V(algebra("virasoro"));
    const long expect[] = {1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12, 14, 21};
    for (long w = 0; w <= 12; ++w) CHECK(V.basis_of_weight(w).size() == static_cast<std::size_t>(expect[w]));
}

TEST_CASE("weight bookkeeping and the field bound") {
    VertexAlgebra V(algebra("virasoro"));
    auto states = V.basis_upto(5);
    for (const auto& a : states)
        for (const auto& b : states) {
            const long wa = VertexAlgebra::weight(a), wb = VertexAlgebra::weight(b);
            if (wa + wb > 7) continue;
            for (long n = -3; n <= wa + wb + 1; ++n) {
                VState r = V.nth_product(Vector::basis(a), Vector::basis(b), n);
                if (n > wa + wb - 1) CHECK(r.is_zero());
                if (!r.is_zero()) CHECK(V.homogeneous_weight(r) == wa + wb - n - 1);
            }
        }
}

TEST_CASE("commutator formula on states") {
    for (const char* name : {"virasoro", "current_sl2"}) {
        VertexAlgebra V(algebra(name));
        auto small = V.basis_upto(name[0] == 'v' ? 4 : 2);
        auto targets = V.basis_upto(2);
        for (const auto& ba : small)
            for (const auto& bb : small)
                for (const auto& bc : targets)
                    for (long m = -2; m <= 2; ++m)
                        for (long k = -2; k <= 2; ++k) {
                            VState a = Vector::basis(ba), b = Vector::basis(bb), c = Vector::basis(bc);
                            VState lhs = V.nth_product(a, V.nth_product(b, c, k), m) - V.nth_product(b, V.nth_product(a, c, m), k);
                            VState rhs;
                            for (long j = 0; j < 12; ++j) rhs += V.nth_product(V.nth_product(a, b, j), c, m + k - j) * binom_z(m, j);
                            CHECK_MESSAGE(lhs == rhs, V.render(a) << " " << V.render(b) << " " << V.render(c) << " " << m << " " << k);
                        }
    }
}

TEST_CASE("zhu modes, star and the hbar bracket") {
    VertexAlgebra V(algebra("virasoro"));
    VState w = V.generator(0), vac = V.vacuum();
    const Hbar one = Hbar::at(1), sym = Hbar::symbolic();
    VState expect = V.nth_product(w, w, -1) + V.translate(w) * PolyScalar(2) + w * PolyScalar(2);
    CHECK(V.zhu_mode(w, w, -1, 0, one) == expect);
    CHECK(V.star(w, w, 0, one) == expect);
    CHECK(V.star(w, vac, 0, one) == w);
    for (long p = 0; p <= 2; ++p) {
        for (long n = -4; n <= 1; ++n) {
            const long k = -n - 1;
            CHECK(V.zhu_mode(vac, w, n, p, sym) == w * (sym.pow(k) * binom_z(p, k)));
        }
        for (long n = 0; n <= 3; ++n) CHECK(V.zhu_mode(w, vac, n, p, sym).is_zero());
        for (const auto& b : V.basis_upto(6)) CHECK(V.star(vac, Vector::basis(b), p, sym) == Vector::basis(b));
        CHECK(V.hbar_bracket(vac, w, p, sym).is_zero());
        CHECK(V.hbar_bracket(w, w, p, one) == V.translate(w) + w * PolyScalar(2));
    }
}

TEST_CASE("both forms of the hbar bracket agree") {
    VertexAlgebra V(algebra("virasoro"));
    const Hbar h = Hbar::symbolic();
    auto states = V.basis_upto(5);
    for (long p = 0; p <= 2; ++p)
        for (const auto& a : states)
            for (const auto& b : states) {
                VState x = Vector::basis(a), y = Vector::basis(b);
                CHECK(V.hbar_bracket(x, y, p, h) == V.hbar_bracket_direct(x, y, h));
                VState tha = V.translate(x) + V.energy(x) * h.pow(1);
                CHECK(V.hbar_bracket(tha, y, p, h).is_zero());
            }
}

TEST_CASE("T + hH times b is a multiple of a_[-2p-2] b") {
    VertexAlgebra V(algebra("virasoro"));
    const Hbar h = Hbar::symbolic();
    auto states = V.basis_upto(4);
    for (long p = 0; p <= 2; ++p)
        for (const auto& a : states)
            for (const auto& b : states) {
                VState x = Vector::basis(a), y = Vector::basis(b);
                VState lhs = V.star(V.translate(x) + V.energy(x) * h.pow(1), y, p, h);
                VState rhs = V.zhu_mode(x, y, -2 * p - 2, p, h) * (h.pow(-2 * p) * Rational((2 * p + 1) * binom_z(-p - 1, p)));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("J span membership") {
    auto alg = std::make_shared<ModeAlgebra>(preset("virasoro"), std::vector<PolyScalar>{PolyScalar(Rational(37, 13))});
    VertexAlgebra V(alg);
    VState w = V.generator(0);
    for (long p = 0; p <= 1; ++p) {
        auto J = stable_j_span(V, p, 6, 1);
        CHECK(J->contains(V.translate(w) + V.energy(w)) == Membership::in);
        CHECK(J->contains(VState()) == Membership::in);
        CHECK(J->contains(V.vacuum()) == Membership::not_in);
        CHECK(J->contains(V.basis_upto(9).size() > 0 ? Vector::basis(V.basis_of_weight(9)[0]) : VState()) == Membership::undecided);
        // T^(k) w = h^k binom(-2, k) w mod J
        VState tk = w;
        Rational fact = 1;
        for (long k = 1; k <= 4; ++k) {
            tk = V.translate(tk);
            fact *= k;
            VState d = tk * PolyScalar(Rational(1) / fact) - w * PolyScalar(binom_z(-2, k));
            CHECK(J->contains(d) == Membership::in);
        }
    }
    auto J0 = stable_j_span(V, 0, 6, 1);
    CHECK(J0->contains(w) == Membership::not_in);
}
