// SPDX-License-Identifier: Apache-2.0
#include "identities.hpp"

#include <numeric>

namespace zhukit {

namespace {

struct NameEntry {
    IdentityId id;
    std::string_view name;
};
constexpr NameEntry kNames[] = {
    {IdentityId::lemma_A2, "lemma_A2"}, {IdentityId::sequals, "sequals"},       {IdentityId::shortlem, "shortlem"},
    {IdentityId::geom_q, "geom_q"},     {IdentityId::star_delta, "star_delta"}, {IdentityId::baexp_coeff, "baexp_coeff"},
};

long sign(long e) { return (e % 2 == 0) ? 1 : -1; }

std::vector<long> range(long a, long b) {
    std::vector<long> v(static_cast<std::size_t>(b - a + 1));
    std::iota(v.begin(), v.end(), a);
    return v;
}

ExponentValue gamma_of(const IdentityCase& c) {
    if (c.gamma) return ExponentValue(*c.gamma);
    return ExponentValue(Symbol::gamma, 1, 0);
}

void require(bool ok, const IdentityCase& c, const std::string& what) {
    if (!ok) throw PreconditionError(std::string(identity_name(c.id)) + ": parameter constraint violated: " + what);
}

void settle(IdentityCase& c, const PolyScalar& lhs, const PolyScalar& rhs) {
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    if (c.outcome == Outcome::pending) c.outcome = (lhs == rhs) ? Outcome::pass : Outcome::fail;
}

}  // namespace

std::string_view identity_name(IdentityId id) {
    for (const auto& e : kNames)
        if (e.id == id) return e.name;
    return "?";
}

IdentityId identity_from_name(std::string_view name) {
    std::string n(name);
    for (auto& ch : n)
        if (ch == '-') ch = '_';
    if (n == "A2" || n == "a2") return IdentityId::lemma_A2;
    if (n == "q") return IdentityId::geom_q;
    for (const auto& e : kNames)
        if (e.name == n) return e.id;
    throw PreconditionError("unknown identity '" + std::string(name) + "'");
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::pending: return "pending";
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::skipped: return "skipped";
    }
    return "?";
}

long IdentityCase::param(std::string_view name) const {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    throw PreconditionError(std::string(identity_name(id)) + ": missing parameter " + std::string(name));
}

PolyScalar h_sum(const ExponentValue& gamma, long n, long X, long Y) {
    if (X < 0 || Y < 1) throw PreconditionError("h_sum requires X >= 0 and Y >= 1");
    PolyScalar s;
    for (long k = 0; k <= Y - 1; ++k) s += binom(gamma + Rational(X), n + X + k) * binom_z(-X, k);
    return s;
}

PolyScalar d_sum(const ExponentValue& gamma, long n, long X, long Y) {
    if (X < 0 || Y < 1) throw PreconditionError("d_sum requires X >= 0 and Y >= 1");
    PolyScalar s;
    for (long k = 0; k <= X - 1; ++k) s += binom(gamma + Rational(k), n + Y + k) * Rational(sign(Y + k) * binom_z(-Y, k));
    return s;
}

IdentityCase check_identity(IdentityCase c) {
    const ExponentValue g = gamma_of(c);
    switch (c.id) {
        case IdentityId::lemma_A2: {
            long n = c.param("n"), X = c.param("X"), Y = c.param("Y");
            require(X >= 0, c, "X >= 0");
            require(Y >= 1, c, "Y >= 1");
            PolyScalar lhs = h_sum(g, n, X, Y) + d_sum(g, n, X, Y);
            // the inductive step in X, checked from direct sums only
            PolyScalar step = binom(g + Rational(X), n + X + Y) * Rational(sign(X + Y + 1) * binom_z(-Y, X));
            bool step_ok = h_sum(g, n, X + 1, Y) - h_sum(g, n, X, Y) == step &&
                           d_sum(g, n, X + 1, Y) - d_sum(g, n, X, Y) == -step;
            if (!step_ok) {
                c.outcome = Outcome::fail;
                c.note = "induction step in X does not hold";
            }
            settle(c, lhs, binom(g, n));
            break;
        }
        case IdentityId::sequals: {
            long p = c.param("p"), j = c.param("j"), ch = c.param("chi");
            require(p >= 0, c, "p >= 0");
            require(ch == 0 || ch == 1, c, "chi in {0,1}");
            if (p == 0 && ch == 1) {
                c.outcome = Outcome::skipped;
                c.note = "special case p = 0, chi = 1 is excluded from this identity";
                return c;
            }
            PolyScalar rhs;
            for (long k = 0; k <= p - ch; ++k) {
                rhs += binom(g + Rational(p), p + j + k + 1) * binom_z(-p, k);
                rhs += binom(g + Rational(k - 1 + ch), p + 1 + j + k) * Rational(sign(p + k) * binom_z(-p - 1 + ch, k - 1 + ch));
            }
            PolyScalar via_a2 = h_sum(g, j + 1, p, p + 1 - ch) + d_sum(g, j + 1, p, p + 1 - ch);
            if (via_a2 != rhs) {
                c.outcome = Outcome::fail;
                c.note = "right side differs from H + D under the substitution";
            }
            settle(c, binom(g, j + 1), rhs);
            break;
        }
        case IdentityId::shortlem: {
            long p = c.param("p"), j = c.param("j");
            require(p >= 0, c, "p >= 0");
            PolyScalar lhs;
            for (long k = 1; k <= p; ++k) lhs += binom(g + Rational(k - 1), j);
            settle(c, lhs, binom(g + Rational(p), j + 1) - binom(g, j + 1));
            break;
        }
        case IdentityId::geom_q: {
            long p = c.param("p"), a = c.param("alpha");
            require(p >= 0, c, "p >= 0");
            require(a >= 0, c, "alpha >= 0");
            Rational lhs = 0;
            for (long k = 0; k <= a; ++k) lhs += binom_z(-p - 1 - k, a - k);
            settle(c, lhs, binom_z(-p, a));
            break;
        }
        case IdentityId::star_delta: {
            long p = c.param("p"), a = c.param("alpha");
            require(p >= 0, c, "p >= 0");
            require(a >= 0, c, "alpha >= 0");
            Rational lhs = 0;
            for (long j = 0; j <= a; ++j) lhs += sign(j) * binom_z(-p - 1, a - j) * binom_z(-p - 1 - a + j, j);
            settle(c, lhs, Rational(a == 0 ? 1 : 0));
            break;
        }
        case IdentityId::baexp_coeff: {
            long p = c.param("p"), a = c.param("alpha");
            require(p >= 0, c, "p >= 0");
            require(a >= 0 && a <= p, c, "0 <= alpha <= p");
            Rational lhs = 0;
            for (long j = 0; j <= p - a; ++j) lhs += binom_z(-p - 1, a + j) * binom_z(p - a, j);
            settle(c, lhs, binom_z(-a - 1, p));
            break;
        }
    }
    return c;
}

IdentityGrid default_grid(IdentityId id) {
    IdentityGrid g{id, {}, {}, {}, {}, {}, {}, {}, {std::nullopt}};
    switch (id) {
        case IdentityId::lemma_A2:
            g.n = range(-4, 8);
            g.X = range(0, 6);
            g.Y = range(1, 6);
            break;
        case IdentityId::sequals:
            g.p = range(0, 4);
            g.j = range(0, 6);
            g.chi = {0, 1};
            break;
        case IdentityId::shortlem:
            g.p = range(0, 6);
            g.j = range(0, 6);
            break;
        case IdentityId::geom_q:
            g.p = range(0, 6);
            g.alpha = range(0, 6);
            break;
        case IdentityId::star_delta:
            g.p = range(0, 4);
            g.alpha = range(0, 6);
            break;
        case IdentityId::baexp_coeff:
            g.p = range(0, 6);
            g.alpha = range(0, 6);
            break;
    }
    return g;
}

std::vector<IdentityCase> expand_grid(const IdentityGrid& g) {
    std::vector<IdentityCase> out;
    auto add = [&](std::vector<std::pair<std::string, long>> params, const std::optional<Rational>& gamma) {
        IdentityCase c;
        c.id = g.id;
        c.gamma = gamma;
        c.params = std::move(params);
        out.push_back(std::move(c));
    };
    const bool uses_gamma = g.id == IdentityId::lemma_A2 || g.id == IdentityId::sequals || g.id == IdentityId::shortlem;
    std::vector<std::optional<Rational>> gammas = uses_gamma ? g.gammas : std::vector<std::optional<Rational>>{std::nullopt};
    for (const auto& gm : gammas) {
        switch (g.id) {
            case IdentityId::lemma_A2:
                for (long n : g.n)
                    for (long X : g.X)
                        for (long Y : g.Y) add({{"n", n}, {"X", X}, {"Y", Y}}, gm);
                break;
            case IdentityId::sequals:
                for (long p : g.p)
                    for (long j : g.j)
                        for (long ch : g.chi) add({{"p", p}, {"j", j}, {"chi", ch}}, gm);
                break;
            case IdentityId::shortlem:
                for (long p : g.p)
                    for (long j : g.j) add({{"p", p}, {"j", j}}, gm);
                break;
            case IdentityId::geom_q:
            case IdentityId::star_delta:
                for (long p : g.p)
                    for (long a : g.alpha) add({{"p", p}, {"alpha", a}}, gm);
                break;
            case IdentityId::baexp_coeff:
                for (long p : g.p)
                    for (long a : g.alpha)
                        if (a <= p) add({{"p", p}, {"alpha", a}}, gm);
                break;
        }
    }
    return out;
}

}  // namespace zhukit
