// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "records.hpp"
#include "scalars.hpp"

namespace zhukit {

// A coset q + Z, stored by its representative in [0, 1).
class CosetZ {
public:
    CosetZ() = default;
    explicit CosetZ(const Rational& any);
    const Rational& rep() const { return rep_; }
    CosetZ operator+(const CosetZ& o) const { return CosetZ(rep_ + o.rep_); }
    bool operator==(const CosetZ& o) const { return rep_ == o.rep_; }
    bool contains(const Rational& q) const;

private:
    Rational rep_ = 0;
};

struct TwistData {
    CosetZ degree;  // [gamma_a]
    Rational weight;  // Delta_a
};

struct LevelQuantities {
    Rational P_a;
    long N_a = 0;
    long R_a = 0;
    Rational xi_a;
};

Rational eps(const TwistData& a);
int chi(const TwistData& a, const TwistData& b);
LevelQuantities level_quantities(const TwistData& a, const Rational& P);
long sigma(const TwistData& a, const TwistData& b, const Rational& P);
TwistData product_grading(const TwistData& a, const TwistData& b, long n);

// gamma_a itself: Delta_a + eps_a.
Rational gamma_value(const TwistData& a);

struct AppendixBOptions {
    std::vector<long> denominators{2, 3, 4};  // Gamma = (1/q)Z
    std::vector<Rational> levels{Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    long max_weight = 2;  // weights range over [0, max_weight] in steps of 1/q
};

// Reference values at eps = -1/2, the sigma identities, periodicity in P and eps additivity over the grids; suite "appendix-b".
std::vector<CaseRecord> appendix_b_cases(const AppendixBOptions& opt);

}  // namespace zhukit
