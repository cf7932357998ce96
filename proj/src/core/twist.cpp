// SPDX-License-Identifier: Apache-2.0
#include "twist.hpp"

#include <tuple>

namespace zhukit {

CosetZ::CosetZ(const Rational& any) : rep_(any - floor_q(any)) { rep_.canonicalize(); }

bool CosetZ::contains(const Rational& q) const { return is_integer(Rational(q - rep_)); }

Rational eps(const TwistData& a) {
    Rational e = CosetZ(a.degree.rep() - a.weight).rep();
    return e == 0 ? e : Rational(e - 1);
}

int chi(const TwistData& a, const TwistData& b) { return eps(a) + eps(b) <= -1 ? 1 : 0; }

Rational gamma_value(const TwistData& a) { return a.weight + eps(a); }

LevelQuantities level_quantities(const TwistData& a, const Rational& P) {
    if (P < 0) throw PreconditionError("level P must be >= 0");
    const Rational e = eps(a);
    LevelQuantities q;
    q.P_a = e + floor_q(P - e) + 1;
    Rational bound = -P - q.P_a;
    q.N_a = to_long(is_integer(bound) ? Rational(bound - 1) : floor_q(bound));
    q.R_a = to_long(q.P_a - e);
    const Rational& r = a.degree.rep();
    q.xi_a = r + floor_q(P + a.weight - r);
    return q;
}

TwistData product_grading(const TwistData& a, const TwistData& b, long n) {
    return TwistData{a.degree + b.degree, a.weight + b.weight - n - 1};
}

long sigma(const TwistData& a, const TwistData& b, const Rational& P) {
    TwistData ab = product_grading(a, b, -1);
    Rational s = level_quantities(ab, P).xi_a + floor_q(P) - level_quantities(a, P).xi_a - level_quantities(b, P).xi_a;
    return to_long(s);
}

namespace {

std::string datum(const TwistData& a) { return "[" + to_string(a.degree.rep()) + "]/" + to_string(a.weight); }

struct Sink {
    std::vector<CaseRecord> out;
    void add(std::vector<std::pair<std::string, std::string>> in, const std::string& defect) {
        out.push_back(CaseRecord{"appendix-b", std::move(in), defect.empty() ? CaseStatus::pass : CaseStatus::fail, defect});
    }
};

}  // namespace

std::vector<CaseRecord> appendix_b_cases(const AppendixBOptions& opt) {
    if (opt.max_weight < 0) throw PreconditionError("max_weight must be >= 0");
    for (const auto& P : opt.levels)
        if (P < 0) throw PreconditionError("level P must be >= 0");
    Sink sink;

    const TwistData half{CosetZ(Rational(1, 2)), Rational(0)};
    for (const auto& [P, Pa, Na] : std::vector<std::tuple<Rational, Rational, long>>{{Rational(0), Rational(1, 2), -1}, {Rational(1, 2), Rational(3, 2), -3}}) {
        const auto q = level_quantities(half, P);
        std::string d;
        if (q.P_a != Pa || q.N_a != Na) d = "P_a = " + to_string(q.P_a) + ", N_a = " + std::to_string(q.N_a);
        sink.add({{"check", "reference_values"}, {"eps", "-1/2"}, {"P", to_string(P)}, {"P_a", to_string(q.P_a)}, {"N_a", std::to_string(q.N_a)}}, d);
    }

    for (long den : opt.denominators) {
        if (den < 1) throw PreconditionError("coset denominators must be positive");
        std::vector<TwistData> grid;
        for (long d = 0; d < den; ++d)
            for (long w = 0; w <= opt.max_weight * den; ++w) grid.push_back(TwistData{CosetZ(Rational(d, den)), Rational(w, den)});
        const std::string group = "1/" + std::to_string(den);

        for (const auto& P : opt.levels)
            for (const auto& a : grid) {
                const Rational e = eps(a);
                const auto qa = level_quantities(a, P);
                std::string d;
                if (e > 0 || e <= -1) d = "eps out of range: " + to_string(e);
                const auto q1 = level_quantities(a, P + 1);
                if (q1.P_a != qa.P_a + 1 || q1.N_a != qa.N_a - 2)
                    d = "P_a(P+1) = " + to_string(q1.P_a) + ", N_a(P+1) = " + std::to_string(q1.N_a);
                if (!(qa.P_a > P) || qa.P_a - 1 > P) d = "P_a = " + to_string(qa.P_a) + " is not the least admissible value";
                if (qa.R_a != to_long(qa.P_a - e)) d = "R_a mismatch";
                sink.add({{"check", "periodicity"}, {"group", group}, {"P", to_string(P)}, {"a", datum(a)}}, d);

                if (e == 0) {
                    std::string d2;
                    for (const auto& b : grid)
                        if (long s = sigma(a, b, P); s != 0) {
                            d2 = "sigma = " + std::to_string(s) + " for b = " + datum(b);
                            break;
                        }
                    sink.add({{"check", "lemma_b2"}, {"group", group}, {"P", to_string(P)}, {"a", datum(a)}}, d2);
                }
                std::string d3;
                bool any = false;
                for (const auto& b : grid) {
                    if (CosetZ(e + eps(b)).rep() != 0) continue;
                    any = true;
                    const long want = -2 * to_long(floor_q(P)) - 2 + sigma(a, b, P);
                    if (qa.N_a != want) {
                        d3 = "N_a = " + std::to_string(qa.N_a) + " but -2floor(P)-2+sigma = " + std::to_string(want) + " for b = " + datum(b);
                        break;
                    }
                }
                if (any) sink.add({{"check", "lemma_b3"}, {"group", group}, {"P", to_string(P)}, {"a", datum(a)}}, d3);
            }

        for (const auto& a : grid) {
            std::string d;
            for (const auto& b : grid)
                for (long n = -4; n <= 4 && d.empty(); ++n) {
                    const Rational got = eps(product_grading(a, b, n));
                    if (got != eps(a) + eps(b) + chi(a, b)) d = "b = " + datum(b) + ", n = " + std::to_string(n) + ": eps = " + to_string(got);
                }
            sink.add({{"check", "eps_additivity"}, {"group", group}, {"a", datum(a)}}, d);
        }
    }
    return std::move(sink.out);
}

}  // namespace zhukit
