#include "doctest.h"
#include "suites.hpp"

using namespace zhukit;

namespace {

std::map<CaseStatus, int> tally(const std::vector<CaseRecord>& rs) {
    std::map<CaseStatus, int> out;
    for (const auto& r : rs) ++out[r.status];
    return out;
}

}  // namespace

TEST_CASE("identity suites pass on a small virasoro grid") {
    VertexAlgebra V(std::make_shared<ModeAlgebra>(preset("virasoro")));
    SuiteOptions opt;
    opt.ps = {0, 1};
    opt.weight_cutoff = 4;
    opt.jobs = 2;
    for (const auto& s : suite_names()) {
        auto rs = verify_suite(s, V, opt);
        CHECK_MESSAGE(!rs.empty(), s);
        auto t = tally(rs);
        CHECK_MESSAGE(t[CaseStatus::fail] == 0, s);
        CHECK_MESSAGE(t[CaseStatus::error] == 0, s);
        CHECK_MESSAGE(t[CaseStatus::undecided] == 0, s);
        for (const auto& r : rs) CHECK(r.suite == s);
    }
}

TEST_CASE("suites at a fixed hbar value") {
    VertexAlgebra V(std::make_shared<ModeAlgebra>(preset("current_sl2")));
    SuiteOptions opt;
    opt.ps = {0, 1};
    opt.weight_cutoff = 2;
    opt.hbar = Rational(3);
    for (const char* s : {"tind", "skew", "brakderiv", "phi"}) {
        auto t = tally(verify_suite(s, V, opt));
        CHECK_MESSAGE(t[CaseStatus::fail] + t[CaseStatus::error] == 0, s);
    }
}

TEST_CASE("case records are deterministic across job counts") {
    VertexAlgebra V(std::make_shared<ModeAlgebra>(preset("virasoro")));
    SuiteOptions a, b;
    a.ps = b.ps = {1};
    a.weight_cutoff = b.weight_cutoff = 4;
    a.jobs = 1;
    b.jobs = 4;
    auto ra = verify_suite("skew", V, a), rb = verify_suite("skew", V, b);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i].inputs == rb[i].inputs);
        CHECK(ra[i].status == rb[i].status);
    }
}

TEST_CASE("J membership has teeth") {
    // dropping the bracket term from the skew defect leaves h, which survives in U(sl2)
    auto alg = std::make_shared<ModeAlgebra>(preset("current_sl2"));
    VertexAlgebra V(alg);
    VertexAlgebra Vs(specialize_centrals(*alg));
    auto J = stable_j_span(Vs, 0, 3, 1);
    VState e = V.generator(0), f = V.generator(2);
    const Hbar h = Hbar::at(1);
    VState comm = V.star(e, f, 0, h) - V.star(f, e, 0, h);
    CHECK(J->contains(comm - V.hbar_bracket(e, f, 0, h)) == Membership::in);
    CHECK(J->contains(comm) == Membership::not_in);
    // the product at p = 1 does not agree with the p = 0 product modulo J_1
    auto J1 = stable_j_span(Vs, 1, 4, 1);
    VState w = V.generator(1);
    CHECK(J1->contains(V.star(w, w, 1, h) - V.star(w, w, 0, h)) == Membership::not_in);
}

TEST_CASE("unknown suites and bad options are rejected") {
    VertexAlgebra V(std::make_shared<ModeAlgebra>(preset("virasoro")));
    SuiteOptions opt;
    CHECK_THROWS_AS(verify_suite("nope", V, opt), PreconditionError);
    opt.hbar = Rational(0);
    CHECK_THROWS_AS(verify_suite("skew", V, opt), PreconditionError);
    CHECK(is_suite("assoc"));
    CHECK_FALSE(is_suite("modules"));
}
