// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion. Comparisons are exact; only runtimes have budgets.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "commands.hpp"
#include "enveloping.hpp"
#include "suites.hpp"
#include "twist.hpp"

namespace {

using namespace zhukit;
using nlohmann::ordered_json;

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string join(const std::vector<std::string>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s + "}";
}

std::vector<std::string> strings(const ordered_json& a) {
    std::vector<std::string> out;
    for (const auto& x : a) out.push_back(x.get<std::string>());
    return out;
}

// Every case passed; per-suite counts go into the detail.
void require_all_pass(Outcome& o, const Report& r, const std::vector<std::string>& must_have, const std::string& key = "") {
    std::map<std::string, std::map<CaseStatus, long>> per;
    for (const auto& c : r.cases) {
        std::string group = c.suite;
        if (!key.empty())
            for (const auto& [k, v] : c.inputs)
                if (k == key) group = v;
        ++per[group][c.status];
    }
    const Summary s = summarize(r.cases);
    o.require(s.total > 0, "no cases ran");
    o.require(s.fail == 0, std::to_string(s.fail) + " failed");
    o.require(s.error == 0, std::to_string(s.error) + " errored");
    o.require(s.undecided == 0, std::to_string(s.undecided) + " undecided");
    for (const auto& name : must_have) o.require(per[name][CaseStatus::pass] > 0, "no passing '" + name + "' cases");
    std::string counts;
    for (const auto& [name, st] : per) counts += (counts.empty() ? "" : " ") + name + "=" + std::to_string(st.count(CaseStatus::pass) ? st.at(CaseStatus::pass) : 0);
    o.note(std::to_string(s.pass) + "/" + std::to_string(s.total) + " pass" + (s.skipped ? ", " + std::to_string(s.skipped) + " skipped" : "") + " [" + counts + "]");
    for (const auto& c : r.cases)
        if (c.status != CaseStatus::pass && c.status != CaseStatus::skipped) {
            o.note("first: " + c.suite + " " + c.defect);
            break;
        }
}

Outcome criterion1() {
    Outcome o;
    const Report r0 = run_command("present", {{"algebra", "vir"}, {"p", 0}, {"cutoff", 6}});
    const auto& g0 = r0.results["generators"];
    o.require(g0.size() == 1 && g0[0]["word"] == "L[0]", "p=0 generators are not {L[0]}");
    o.require(r0.results["relations"].empty(), "p=0 has relations " + join(strings(r0.results["relations"])));
    o.require(r0.results["presentation"].get<std::string>().rfind("free commutative", 0) == 0, "p=0 presentation: " + r0.results["presentation"].get<std::string>());

    const Report r1 = run_command("present", {{"algebra", "vir"}, {"p", 1}, {"cutoff", 4}});
    std::vector<std::string> got = strings(r1.results["relations"]);
    std::sort(got.begin(), got.end());
    const std::vector<std::string> want{"A L - L A", "A^2 - 2 L A - 2 A"};
    o.require(got == want, "p=1 relations " + join(got) + ", expected " + join(want));
    if (o.ok) o.note("p=0 free on L; p=1 " + join(got));
    return o;
}

Outcome criterion2() {
    Outcome o;
    const Report r = run_command("present", {{"algebra", "sl2"}, {"p", 0}, {"cutoff", 3}});
    std::vector<std::string> got = strings(r.results["relations"]);
    std::sort(got.begin(), got.end());
    // [e,f] = h, [h,e] = 2e, [h,f] = -2f written as words in the generators e, h, f.
    std::vector<std::string> want{"f e - e f + h", "h e - e h - 2 e", "f h - h f - 2 f"};
    std::sort(want.begin(), want.end());
    o.require(r.results["generators"].size() == 3, "expected generators e[0], h[0], f[0]");
    o.require(got == want, "relations " + join(got));
    const Report z = run_command("reduce", {{"algebra", "sl2"}, {"p", 0}, {"expression", "e[-1] f[1]"}});
    o.require(z.results["normal_form"] == "0", "e[-1] f[1] reduces to " + z.results["normal_form"].get<std::string>());
    if (o.ok) o.note("3 commutator relations at filtration <= 3; e[-1] f[1] -> 0");
    return o;
}

Outcome criterion3() {
    Outcome o;
    const Report r = run_command("present", {{"algebra", "sl2"}, {"p", 0}, {"ideal", ordered_json::array({"e[0]^2"})}, {"max_filtration", 6}});
    std::vector<long> dims;
    for (const auto& d : r.results["quotient"]["dims"]) dims.push_back(d.get<long>());
    std::string seq;
    for (long d : dims) seq += (seq.empty() ? "" : " ") + std::to_string(d);
    o.require(dims.size() >= 2 && dims.back() == 5 && dims[dims.size() - 2] == 5, "dims " + seq);
    o.note("dims " + seq);
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::string suites;
    for (const auto& s : suite_names()) suites += (suites.empty() ? "" : ",") + s;
    const Report r = run_command("verify", {{"algebra", "vir"}, {"suite", suites}, {"p", "0,1,2"}, {"weight_cutoff", 6}, {"hbar", "sym"}});
    require_all_pass(o, r, suite_names());
    return o;
}

Outcome criterion5() {
    Outcome o;
    const Report r = run_command("identities", {{"suite", "catalog"}});
    require_all_pass(o, r, {"lemma_A2", "sequals", "shortlem", "geom_q", "star_delta", "baexp_coeff"});
    long a2 = 0;
    for (const auto& c : r.cases)
        if (c.suite == "lemma_A2" && c.status == CaseStatus::pass && c.inputs[0].second == "sym") ++a2;
    o.require(a2 == 13 * 7 * 6, "lemma_A2 covered " + std::to_string(a2) + " of 546 grid points with symbolic gamma");
    return o;
}

Outcome criterion6() {
    Outcome o;
    const TwistData half{CosetZ(Rational(1, 2)), Rational(0)};
    o.require(eps(half) == Rational(-1, 2), "eps of the half-integer generator is not -1/2");
    const auto q0 = level_quantities(half, Rational(0));
    const auto q1 = level_quantities(half, Rational(1, 2));
    o.require(q0.P_a == Rational(1, 2) && q0.N_a == -1, "P=0 gives P_a=" + to_string(q0.P_a) + ", N_a=" + std::to_string(q0.N_a));
    o.require(q1.P_a == Rational(3, 2) && q1.N_a == -3, "P=1/2 gives P_a=" + to_string(q1.P_a) + ", N_a=" + std::to_string(q1.N_a));
    const Report r = run_command("identities", {{"suite", "appendix-b"}, {"gamma_group", "1/2,1/3,1/4"}});
    require_all_pass(o, r, {"reference_values", "lemma_b2", "lemma_b3"}, "check");
    return o;
}

Outcome criterion7() {
    Outcome o;
    const Report r = run_command("verify", {{"algebra", "vir"}, {"suite", "modules"}, {"p", "0,1,2"}, {"depth", 4}, {"module_weight", 4}});
    require_all_pass(o, r, {"borcherds", "zhu_action", "akbk", "thann", "j_annihilation", "l0", "grading"}, "check");
    return o;
}

Outcome criterion8() {
    Outcome o;
    long agree = 0, total = 0;
    for (const char* name : {"virasoro", "current_sl2"}) {
        auto A = resolve_algebra(name);
        Enveloping U(A);
        const auto words = sorted_words(*A, -3, 3, 4);
        for (long p = 0; p <= 2; ++p) {
            IdealOracle oracle(A, p, 4, 3);
            for (const auto& w : words) {
                if (word_degree(w) != 0) continue;
                ++total;
                const UEElement m = U.monomial(w);
                const bool killed = zp_reduce(U, m, p).is_zero();
                const Membership v = oracle.test(m);
                if (v == (killed ? Membership::in : Membership::not_in)) {
                    ++agree;
                } else if (o.ok) {
                    o.require(false, std::string(name) + " p=" + std::to_string(p) + " " + A->render(w) + ": suffix rule " + (killed ? "kills" : "keeps") +
                                         ", oracle " + std::string(membership_name(v)));
                }
            }
        }
    }
    o.note(std::to_string(agree) + "/" + std::to_string(total) + " monomials agree");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "virasoro presentations at p=0,1", 10, criterion1},
        {2, "sl2 level-0 relations and reduction", 30, criterion2},
        {3, "sl2 quotient by e0^2 stabilizes at 5", 60, criterion3},
        {4, "virasoro identity suites, weight 6, p<=2", 300, criterion4},
        {5, "combinatorial identity catalog", 30, criterion5},
        {6, "twisted level bookkeeping", 5, criterion6},
        {7, "virasoro Verma module checks, depth 4, p<=2", 120, criterion7},
        {8, "suffix rule vs membership oracle", 120, criterion8},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("threw: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_s) o.require(false, "over the runtime budget");
        if (!o.ok) ++failed;
        std::printf("criterion %d: %s  %s  (%.2f s of %.0f s)  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs, c.budget_s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
