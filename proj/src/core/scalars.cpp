// SPDX-License-Identifier: Apache-2.0
#include "scalars.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace zhukit {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    // accept the unicode minus as well, reports may be pasted back in
    for (std::size_t pos; (pos = s.find("\xe2\x88\x92")) != std::string::npos;) s.replace(pos, 3, "-");
    if (s.empty()) throw ParseError("empty rational", 0);
    if (s[0] == '+') s.erase(0, 1);
    std::size_t start = (s[0] == '-') ? 1 : 0;
    std::size_t slash = s.find('/');
    auto digits_ok = [&](std::size_t b, std::size_t e) {
        if (b >= e) return false;
        for (std::size_t i = b; i < e; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!digits_ok(start, slash == std::string::npos ? s.size() : slash) ||
        (slash != std::string::npos && !digits_ok(slash + 1, s.size())))
        throw ParseError("not a rational: '" + std::string(text) + "'", 0);
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("not a rational: '" + std::string(text) + "'", 0);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }

long to_long(const Rational& x) {
    Rational q = x;
    q.canonicalize();
    if (!is_integer(q)) throw PreconditionError("expected an integer, got " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw PreconditionError("integer out of range: " + q.get_str());
    return q.get_num().get_si();
}

Rational floor_q(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

std::string_view symbol_name(Symbol s) {
    switch (s) {
        case Symbol::c: return "c";
        case Symbol::k: return "k";
        case Symbol::gamma: return "gamma";
        case Symbol::lambda: return "lambda";
        case Symbol::hbar: return "h";
    }
    return "?";
}

std::optional<Symbol> symbol_from_name(std::string_view name) {
    if (name == "c") return Symbol::c;
    if (name == "k") return Symbol::k;
    if (name == "gamma" || name == "\xce\xb3") return Symbol::gamma;
    if (name == "lambda" || name == "\xce\xbb") return Symbol::lambda;
    if (name == "h" || name == "hbar" || name == "\xc4\xa7") return Symbol::hbar;
    return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kPolySymbols; ++i) {
        int e = exp[i] + o.exp[i];
        if (e > 255) throw ZhukitError("symbol exponent overflow");
        r.exp[i] = static_cast<std::uint8_t>(e);
    }
    int h = hexp + o.hexp;
    if (h > 32000 || h < -32000) throw ZhukitError("hbar exponent overflow");
    r.hexp = static_cast<std::int16_t>(h);
    return r;
}

PolyScalar::PolyScalar(long v) {
    if (v != 0) terms_.emplace_back(Monomial{}, Rational(v));
}

PolyScalar::PolyScalar(const Rational& q) {
    if (q != 0) {
        terms_.emplace_back(Monomial{}, q);
        terms_.back().second.canonicalize();
    }
}

PolyScalar PolyScalar::symbol(Symbol s, int power) {
    Monomial m;
    if (s == Symbol::hbar) {
        m.hexp = static_cast<std::int16_t>(power);
    } else {
        if (power < 0) throw PreconditionError("negative power of " + std::string(symbol_name(s)));
        m.exp[static_cast<int>(s)] = static_cast<std::uint8_t>(power);
    }
    PolyScalar p;
    p.terms_.emplace_back(m, Rational(1));
    return p;
}

PolyScalar PolyScalar::from_terms(std::vector<Term> terms) {
    PolyScalar p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void PolyScalar::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first.key() < b.first.key(); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        t.second.canonicalize();
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            if (!out.empty() && out.back().second == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().second == 0) out.pop_back();
    terms_ = std::move(out);
}

Rational PolyScalar::constant_value() const {
    if (!is_constant()) throw PreconditionError("scalar is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational PolyScalar::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.first == m) return t.second;
    return 0;
}

int PolyScalar::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

bool PolyScalar::has_symbol(Symbol s) const {
    for (const auto& t : terms_) {
        if (s == Symbol::hbar ? t.first.hexp != 0 : t.first.exp[static_cast<int>(s)] != 0) return true;
    }
    return false;
}

std::pair<int, int> PolyScalar::hbar_range() const {
    if (terms_.empty()) throw PreconditionError("hbar range of zero");
    int lo = terms_[0].first.hexp, hi = lo;
    for (const auto& t : terms_) {
        lo = std::min<int>(lo, t.first.hexp);
        hi = std::max<int>(hi, t.first.hexp);
    }
    return {lo, hi};
}

PolyScalar PolyScalar::operator-() const {
    PolyScalar r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first.key() < b->first.key())) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first.key() < a->first.key()) {
            out.push_back(*b++);
        } else {
            Rational s = a->second + b->second;
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) { return *this += -o; }

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.is_constant()) return PolyScalar(b) *= a.terms_[0].second;
    if (b.is_constant()) return PolyScalar(a) *= b.terms_[0].second;
    PolyScalar r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) r.terms_.emplace_back(x.first * y.first, x.second * y.second);
    r.normalize();
    return r;
}

PolyScalar& PolyScalar::operator*=(const PolyScalar& o) { return *this = *this * o; }

PolyScalar& PolyScalar::operator*=(const Rational& q0) {
    Rational q = q0;
    q.canonicalize();
    if (q == 0) {
        terms_.clear();
    } else if (q != 1) {
        for (auto& t : terms_) t.second *= q;
    }
    return *this;
}

bool PolyScalar::operator<(const PolyScalar& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first.key() != o.terms_[i].first.key()) return terms_[i].first.key() < o.terms_[i].first.key();
        int c = cmp(terms_[i].second, o.terms_[i].second);
        if (c != 0) return c < 0;
    }
    return false;
}

PolyScalar PolyScalar::eval_at(const std::map<Symbol, Rational>& values) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, q] : terms_) {
        Monomial rest = m;
        Rational v = q;
        for (const auto& [sym, val] : values) {
            if (sym == Symbol::hbar) {
                if (m.hexp == 0) continue;
                if (val == 0) {
                    if (m.hexp < 0) throw PoleError("pole at h=0");
                    v = 0;
                } else {
                    Rational pw = 1;
                    for (int i = 0; i < std::abs(m.hexp); ++i) pw *= val;
                    v *= (m.hexp > 0) ? pw : Rational(1 / pw);
                }
                rest.hexp = 0;
            } else {
                int idx = static_cast<int>(sym);
                for (int i = 0; i < m.exp[idx]; ++i) v *= val;
                rest.exp[idx] = 0;
            }
        }
        if (v != 0) out.emplace_back(rest, std::move(v));
    }
    return from_terms(std::move(out));
}

std::map<int, PolyScalar> PolyScalar::by_hbar() const {
    std::map<int, std::vector<Term>> buckets;
    for (const auto& [m, q] : terms_) {
        Monomial r = m;
        r.hexp = 0;
        buckets[m.hexp].emplace_back(r, q);
    }
    std::map<int, PolyScalar> out;
    for (auto& [h, ts] : buckets) out.emplace(h, from_terms(std::move(ts)));
    return out;
}

std::optional<PolyScalar> PolyScalar::divide_exact(const PolyScalar& d) const {
    if (d.is_zero()) throw PreconditionError("division by zero scalar");
    if (is_zero()) return PolyScalar{};
    if (d.is_constant()) return PolyScalar(*this) *= Rational(1 / d.constant_value());
    const Term& lead = d.terms_.back();
    int hmin = hbar_range().first - d.hbar_range().second - 1;
    PolyScalar r = *this;
    std::vector<Term> q;
    while (!r.is_zero()) {
        const Term& rt = r.terms_.back();
        Monomial m;
        for (int i = 0; i < kPolySymbols; ++i) {
            if (rt.first.exp[i] < lead.first.exp[i]) return std::nullopt;
            m.exp[i] = static_cast<std::uint8_t>(rt.first.exp[i] - lead.first.exp[i]);
        }
        int h = rt.first.hexp - lead.first.hexp;
        if (h < hmin) return std::nullopt;
        m.hexp = static_cast<std::int16_t>(h);
        Rational coef = rt.second / lead.second;
        q.emplace_back(m, coef);
        PolyScalar step;
        step.terms_.emplace_back(m, coef);
        r -= step * d;
    }
    return from_terms(std::move(q));
}

namespace {

std::string monomial_text(const Monomial& m) {
    std::string s;
    for (int i = 0; i < kPolySymbols; ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += symbol_name(static_cast<Symbol>(i));
        if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    if (m.hexp != 0) {
        if (!s.empty()) s += '*';
        s += "h";
        if (m.hexp != 1) s += "^" + std::to_string(m.hexp);
    }
    return s;
}

}  // namespace

std::string PolyScalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, q] = *it;
        bool neg = q < 0;
        Rational a = abs(q);
        std::string body;
        if (m.is_one()) {
            body = a.get_str();
        } else if (a == 1) {
            body = monomial_text(m);
        } else {
            body = a.get_str() + "*" + monomial_text(m);
        }
        if (first) {
            out = neg ? "-" + body : body;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

std::string to_string(const PolyScalar& p) { return p.str(); }

std::string render_linear(const std::vector<std::pair<PolyScalar, std::string>>& terms) {
    std::string out;
    auto emit = [&out](bool neg, const std::string& body) {
        if (out.empty()) {
            out = neg ? "-" + body : body;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    };
    for (const auto& [coeff, body] : terms) {
        if (coeff.is_zero()) continue;
        const auto& ts = coeff.terms();
        if (body.empty()) {
            for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
                PolyScalar single = PolyScalar::from_terms({*it});
                bool neg = it->second < 0;
                emit(neg, (neg ? -single : single).str());
            }
        } else if (ts.size() == 1) {
            bool neg = ts[0].second < 0;
            PolyScalar a = neg ? -coeff : coeff;
            emit(neg, a == PolyScalar(1) ? body : a.str() + " " + body);
        } else {
            emit(false, "(" + coeff.str() + ") " + body);
        }
    }
    return out.empty() ? "0" : out;
}

std::size_t PolyScalar::hash() const {
    std::size_t h = terms_.size();
    for (const auto& [m, q] : terms_) {
        h = h * 1000003u ^ std::hash<std::uint64_t>{}(m.key());
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_ui(q.get_num_mpz_t())) ^ (mpz_sgn(q.get_num_mpz_t()) < 0 ? 0x9e37u : 0u);
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_ui(q.get_den_mpz_t()));
    }
    return h;
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    PolyScalar run() {
        PolyScalar v = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(i_) + " in '" + std::string(s_) + "'", i_);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char ch) {
        skip();
        if (i_ < s_.size() && s_[i_] == ch) {
            ++i_;
            return true;
        }
        return false;
    }
    bool eat_minus() {
        skip();
        if (s_.substr(i_, 3) == "\xe2\x88\x92") {
            i_ += 3;
            return true;
        }
        return eat('-');
    }
    PolyScalar expr() {
        PolyScalar v;
        bool neg = eat_minus();
        if (!neg) eat('+');
        v = term();
        if (neg) v = -v;
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat_minus()) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    PolyScalar term() {
        PolyScalar v = factor();
        for (;;) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                PolyScalar d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                v *= Rational(1 / d.constant_value());
            } else {
                return v;
            }
        }
    }
    long integer() {
        skip();
        bool neg = eat_minus();
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) fail("expected integer");
        long v = std::stol(std::string(s_.substr(b, i_ - b)));
        return neg ? -v : v;
    }
    PolyScalar factor() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        PolyScalar base;
        if (eat('(')) {
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            std::size_t b = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            base = PolyScalar(Rational(mpz_class(std::string(s_.substr(b, i_ - b)))));
        } else {
            std::size_t b = i_;
            while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || static_cast<unsigned char>(s_[i_]) >= 0x80)) ++i_;
            auto name = s_.substr(b, i_ - b);
            auto sym = symbol_from_name(name);
            if (!sym) {
                i_ = b;
                fail("unknown symbol '" + std::string(name) + "'");
            }
            base = PolyScalar::symbol(*sym);
        }
        if (eat('^')) {
            long e = integer();
            if (e < 0) {
                if (base.terms().size() != 1 || base.terms()[0].first.degree() != 0) fail("negative power of a non-hbar factor");
                Monomial m = base.terms()[0].first;
                m.hexp = static_cast<std::int16_t>(m.hexp * e);
                Rational q = base.terms()[0].second, pw = 1;
                for (long i = 0; i < -e; ++i) pw *= q;
                return PolyScalar::from_terms({{m, Rational(1 / pw)}});
            }
            PolyScalar r = 1;
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

PolyScalar PolyScalar::parse(std::string_view text) { return ScalarParser(text).run(); }

ExponentValue::ExponentValue(Symbol s, Rational slope, Rational offset) : offset_(std::move(offset)) {
    if (s == Symbol::hbar) throw PreconditionError("hbar cannot be a binomial top");
    if (slope != 0) {
        sym_ = s;
        slope_ = std::move(slope);
    }
}

ExponentValue ExponentValue::from_poly(const PolyScalar& p) {
    Rational offset = 0;
    std::optional<Symbol> sym;
    Rational slope = 0;
    for (const auto& [m, q] : p.terms()) {
        if (m.hexp != 0 || m.degree() > 1) throw PreconditionError("binomial top must be linear in one symbol: " + p.str());
        if (m.degree() == 0) {
            offset = q;
            continue;
        }
        for (int i = 0; i < kPolySymbols; ++i) {
            if (m.exp[i] == 0) continue;
            if (sym && *sym != static_cast<Symbol>(i)) throw PreconditionError("binomial top must involve one symbol: " + p.str());
            sym = static_cast<Symbol>(i);
            slope = q;
        }
    }
    if (!sym) return ExponentValue(offset);
    return ExponentValue(*sym, slope, offset);
}

PolyScalar ExponentValue::as_poly() const {
    PolyScalar r(offset_);
    if (sym_) r += PolyScalar::symbol(*sym_) * slope_;
    return r;
}

ExponentValue ExponentValue::operator+(const Rational& q) const {
    ExponentValue r = *this;
    r.offset_ += q;
    return r;
}

Rational binom_q(const Rational& alpha, long j) {
    if (j < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < j; ++i) {
        r *= alpha - i;
        r /= i + 1;
    }
    return r;
}

Rational binom_z(long top, long j) {
    if (j < 0) return 0;
    if (top >= 0 && top < j) return 0;
    thread_local std::unordered_map<std::uint64_t, Rational> cache;
    if (top > -(1 << 20) && top < (1 << 20) && j < (1 << 20)) {
        std::uint64_t key = (static_cast<std::uint64_t>(top + (1 << 20)) << 32) | static_cast<std::uint64_t>(j);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Rational r = binom_q(Rational(top), j);
        cache.emplace(key, r);
        return r;
    }
    return binom_q(Rational(top), j);
}

PolyScalar binom(const ExponentValue& alpha, long j) {
    if (j < 0) return {};
    if (alpha.is_rational()) return PolyScalar(binom_q(alpha.offset(), j));
    PolyScalar a = alpha.as_poly();
    PolyScalar r = 1;
    Rational fact = 1;
    for (long i = 0; i < j; ++i) {
        r = r * (a - PolyScalar(i));
        fact *= i + 1;
    }
    return r *= Rational(1 / fact);
}

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(static_cast<std::size_t>(std::max(order, -1) + 1)) {
    if (order < 0) throw PreconditionError("series order must be >= 0");
}

TruncatedSeries TruncatedSeries::one_plus_x_pow(const ExponentValue& alpha, int order, const PolyScalar& scale) {
    TruncatedSeries s(order);
    PolyScalar pw = 1;
    for (int n = 0; n <= order; ++n) {
        s.c_[n] = binom(alpha, n) * pw;
        pw = pw * scale;
    }
    return s;
}

const PolyScalar& TruncatedSeries::coeff(int n) const {
    static const PolyScalar zero;
    if (n > order_)
        throw TruncationError("coefficient " + std::to_string(n) + " requested beyond truncation order " + std::to_string(order_));
    if (n < 0) return zero;
    return c_[n];
}

void TruncatedSeries::set_coeff(int n, PolyScalar v) {
    if (n < 0 || n > order_) throw TruncationError("coefficient index " + std::to_string(n) + " outside series order");
    c_[n] = std::move(v);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i)
        for (int j = 0; i + j <= r.order_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

PolyScalar coeff_extract(const TruncatedSeries& f, int n) { return f.coeff(n); }

}  // namespace zhukit
