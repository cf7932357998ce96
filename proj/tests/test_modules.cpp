#include "doctest.h"
#include "modules.hpp"

using namespace zhukit;

namespace {

std::shared_ptr<const ModeAlgebra> vir() { return std::make_shared<ModeAlgebra>(preset("virasoro")); }
std::shared_ptr<const ModeAlgebra> sl2() { return std::make_shared<ModeAlgebra>(preset("current_sl2")); }

const PolyScalar lam = PolyScalar::symbol(Symbol::lambda);
const PolyScalar cc = PolyScalar::symbol(Symbol::c);

ModeOp L(int m) { return ModeOp{m, 0}; }

// partition counts, independent of the PBW enumeration
long partitions(long n, long max_part) {
    if (n == 0) return 1;
    long r = 0;
    for (long k = 1; k <= std::min(n, max_part); ++k) r += partitions(n - k, k);
    return r;
}

std::string two_by_two(const char* a, const char* b, const char* c, const char* d) {
    return std::string("[[\"") + a + "\",\"" + b + "\"],[\"" + c + "\",\"" + d + "\"]]";
}

std::string level_one_input(const std::string& lmat, const std::string& amat) {
    return R"({"format":"zhumod/1","algebra":"virasoro","p":1,"dimension":2,"labels":["u","v"],"actions":[)"
           R"({"name":"L","word":"L[0]","matrix":)" + lmat + R"(},{"name":"A","word":"L[-1] L[1]","matrix":)" + amat + "}]}";
}

}  // namespace

TEST_CASE("weight spaces of induced modules") {
    auto alg = vir();
    InducedModule M(alg, default_module(alg), 6);
    auto d = M.dims();
    REQUIRE(d.size() == 7);
    for (long j = 0; j <= 6; ++j) CHECK(d[j] == partitions(j, j));
    CHECK(d == std::vector<long>{1, 1, 2, 3, 5, 7, 11});

    auto s = sl2();
    InducedModule T(s, default_module(s), 2);
    CHECK(T.dims() == std::vector<long>{1, 3, 9});
}

TEST_CASE("mode action on the Verma module") {
    auto alg = vir();
    InducedModule M(alg, default_module(alg), 4);
    const Vector x = M.base_vector(0);
    CHECK(M.act(L(0), x) == x * lam);
    CHECK(M.act(L(1), x).is_zero());
    CHECK(M.act(L(1), M.act(L(-1), x)) == x * (lam * Rational(2)));
    CHECK(M.act(L(2), M.act(L(-2), x)) == x * (lam * Rational(4) + cc * Rational(1, 2)));
    // L_0 via the field of the conformal vector agrees with the mode
    VertexAlgebra V(alg);
    const Vector y = M.act(L(-1), M.act(L(-2), x));
    CHECK(M.zero_mode(V.generator(0), y) == M.act(L(0), y));
    CHECK(M.mode(V.generator(0), -3, x) == M.act(L(-3), x));
}

TEST_CASE("Borcherds identity on induced modules") {
    auto alg = vir();
    VertexAlgebra V(alg);
    InducedModule M(alg, default_module(alg), 3);
    const VState w = V.generator(0);
    const Vector x = M.base_vector(0);
    CHECK(borcherds_defect(M, V, w, w, 1, -1, -1, x).is_zero());
    for (const auto& xb : M.basis_of_degree(1)) CHECK(borcherds_defect(M, V, w, w, 2, -2, -1, Vector::basis(xb)).is_zero());
    for (const auto& a : V.basis_upto(3))
        for (const auto& b : V.basis_upto(3))
            for (long n = -2; n <= 2; ++n)
                for (long m = -2; m <= 2; ++m)
                    for (const auto& xb : M.basis_upto(2)) {
                        Vector d = borcherds_defect(M, V, Vector::basis(a), Vector::basis(b), m, 1 - m, n, Vector::basis(xb));
                        CHECK_MESSAGE(d.is_zero(), V.render(a), " ", V.render(b), " n=", n, " m=", m);
                    }
    // the defect has teeth: dropping the vacuum term changes the answer
    CHECK(M.mode(w, 1, M.mode(w, -1, x)) != M.mode(w, -1, M.mode(w, 1, x)));
}

TEST_CASE("zero modes, the a_m b_k product rule and T-annihilation") {
    auto alg = vir();
    VertexAlgebra V(alg);
    InducedModule M(alg, default_module(alg), 3);
    const VState w = V.generator(0);
    const Vector x = M.base_vector(0);
    CHECK(zhu_action_defect(M, V, w, w, 0, x).is_zero());
    CHECK(M.zero_mode(V.star(w, w, 0, Hbar::at(1)), x) == x * (lam * lam));
    CHECK(zhu_action_defect(M, V, V.vacuum(), w, 0, x).is_zero());
    for (long p = 1; p <= 2; ++p)
        for (const auto& xb : M.basis_of_degree(p)) CHECK(zhu_action_defect(M, V, w, w, p, Vector::basis(xb)).is_zero());
    for (const auto& xb : M.basis_of_degree(1)) CHECK(akbk_defect(M, V, w, w, 1, 1, Vector::basis(xb)).is_zero());
    for (long k = 0; k <= 2; ++k)
        for (const auto& xb : M.basis_of_degree(2)) CHECK(akbk_defect(M, V, w, w, k, 2, Vector::basis(xb)).is_zero());
    CHECK_THROWS_AS(akbk_defect(M, V, w, w, 3, 2, x), PreconditionError);
    for (const auto& xb : M.basis_upto(3)) {
        CHECK(thann_defect(M, V, w, Vector::basis(xb)).is_zero());
        CHECK(l0_defect(M, 0, xb).is_zero());
    }
    // a product at the wrong level does not act correctly on M_1
    const Vector x1 = M.act(L(-1), x);
    CHECK_FALSE(zhu_action_defect(M, V, w, w, 0, x1).is_zero());

    auto s = sl2();
    VertexAlgebra S(s);
    InducedModule T(s, default_module(s), 2);
    for (const auto& xb : T.basis_upto(2)) CHECK(thann_defect(T, S, S.generator(0), Vector::basis(xb)).is_zero());
}

TEST_CASE("J generators annihilate low degrees") {
    auto alg = vir();
    VertexAlgebra V(alg);
    InducedModule M(alg, default_module(alg), 2);
    for (long p = 0; p <= 1; ++p) {
        auto gens = j_generators(V, p, 6 + 2 * p, Hbar::at(1));
        REQUIRE(!gens.empty());
        for (const auto& [name, g] : gens)
            for (const auto& xb : M.basis_upto(p)) CHECK_MESSAGE(M.zero_mode(g, Vector::basis(xb)).is_zero(), name);
    }
    // J_0 does not kill M_1: w_[-2] (T w) survives there
    auto g0 = j_generators(V, 0, 6, Hbar::at(1));
    bool some_survive = false;
    for (const auto& [name, g] : g0) some_survive |= !M.zero_mode(g, M.act(L(-1), M.base_vector(0))).is_zero();
    CHECK(some_survive);
}

TEST_CASE("composing modes") {
    auto alg = vir();
    VertexAlgebra V(alg);
    InducedModule M(alg, default_module(alg), 3);
    const VState w = V.generator(0);
    for (auto [m, k] : std::vector<std::pair<long, long>>{{1, -1}, {2, -2}, {0, 0}, {-1, 1}}) {
        auto r = compose_modes(M, V, w, w, m, k, 3);
        CHECK(r.decided);
        CHECK_MESSAGE(r.verified, r.note);
        CHECK(r.vectors_checked == 7);
    }
    auto r = compose_modes(M, V, w, V.vacuum(), 2, 0, 3);
    CHECK(r.verified);
}

TEST_CASE("level-1 module input validation") {
    auto alg = vir();
    // L = diag(1, 2), A = diag(0, 2): A^2 = 2LA - 2A holds on both eigenvectors
    auto ok = load_zhu_module(level_one_input(two_by_two("1", "0", "0", "2"), two_by_two("0", "0", "0", "2")), alg);
    CHECK(ok.dimension == 2);
    CHECK(ok.p == 1);
    CHECK(std::find(ok.relations.begin(), ok.relations.end(), "A^2 - 2 L A + 2 A") != ok.relations.end());
    // A = 4 on the L = 1 line satisfies A^2 = 2LA + 2A instead, which is rejected
    CHECK_THROWS_AS(load_zhu_module(level_one_input(two_by_two("1", "0", "0", "1"), two_by_two("4", "0", "0", "0")), alg), SchemaError);
    // A and L must commute
    CHECK_THROWS_AS(load_zhu_module(level_one_input(two_by_two("1", "0", "0", "2"), two_by_two("0", "1", "0", "0")), alg), SchemaError);
    // symbolic entries: A = 2 lambda - 2 on the line L = lambda
    auto sym = load_zhu_module(level_one_input(two_by_two("lambda", "0", "0", "lambda"), two_by_two("2*lambda - 2", "0", "0", "0")), alg);
    CHECK(sym.actions.size() == 2);
    CHECK_THROWS_AS(InducedModule(alg, ok, 2), PreconditionError);
}

TEST_CASE("module input errors") {
    auto alg = vir();
    CHECK_THROWS_AS(load_zhu_module("{", alg), ParseError);
    CHECK_THROWS_AS(load_zhu_module(R"({"format":"zhumod/2","p":0,"dimension":1,"actions":[]})", alg), SchemaError);
    CHECK_THROWS_AS(load_zhu_module(R"({"format":"zhumod/1","p":0,"dimension":1,"actions":[{"word":"L[0]","matrix":[["1","2"]]}]})", alg), SchemaError);
    CHECK_THROWS_AS(load_zhu_module(R"({"format":"zhumod/1","p":0,"dimension":1,"actions":[{"word":"L[1]","matrix":[["1"]]}]})", alg), SchemaError);
    // no action for L[0]: induction names the missing word
    auto empty = load_zhu_module(R"({"format":"zhumod/1","p":0,"dimension":1,"actions":[]})", alg);
    try {
        InducedModule M(alg, empty, 2);
        FAIL("expected an error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("L[0]") != std::string::npos);
    }
    // sl2: a nonzero h[0] on a line breaks [e0, f0] = h0
    auto s = sl2();
    CHECK_THROWS_AS(scalar_module(s, {{"h", PolyScalar(1)}}), SchemaError);
    auto round = load_zhu_module(dump_zhu_module(default_module(s)), s);
    CHECK(round.actions.size() == 3);
}

TEST_CASE("module suite on a small grid") {
    auto alg = vir();
    VertexAlgebra V(alg);
    InducedModule M(alg, default_module(alg), 2);
    ModuleSuiteOptions opt;
    opt.ps = {0, 1};
    opt.state_weight = 2;
    opt.mode_range = 2;
    opt.n_lo = -2;
    opt.n_hi = 1;
    opt.conformal = 0;
    opt.jobs = 4;
    auto rs = verify_modules(M, V, opt);
    std::map<std::string, int> seen;
    for (const auto& r : rs) {
        CHECK_MESSAGE(r.status == CaseStatus::pass, r.inputs.front().second, ": ", r.defect);
        ++seen[r.inputs.front().second];
    }
    for (const char* c : {"grading", "borcherds", "zhu_action", "akbk", "j_annihilation", "thann", "l0", "compose"}) CHECK_MESSAGE(seen[c] > 0, c);
}
