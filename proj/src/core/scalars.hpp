// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zhukit {

using Rational = mpq_class;

// Error taxonomy shared by every module; the C API maps these to status codes.
struct ZhukitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : ZhukitError {
    using ZhukitError::ZhukitError;
};
struct TruncationError : ZhukitError {
    using ZhukitError::ZhukitError;
};
struct ParseError : ZhukitError {
    ParseError(const std::string& msg, std::size_t pos) : ZhukitError(msg), position(pos) {}
    std::size_t position;
};
struct SchemaError : ZhukitError {
    using ZhukitError::ZhukitError;
};
struct PoleError : ZhukitError {
    using ZhukitError::ZhukitError;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
bool is_integer(const Rational& q);
long to_long(const Rational& q);  // throws PreconditionError when not an integer
Rational floor_q(const Rational& q);

enum class Symbol : int { c = 0, k = 1, gamma = 2, lambda = 3, hbar = 4 };
inline constexpr int kPolySymbols = 4;  // c, k, gamma, lambda; hbar handled separately
std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

struct Monomial {
    std::array<std::uint8_t, kPolySymbols> exp{};
    std::int16_t hexp = 0;

    int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
    // graded lex over (c, k, gamma, lambda), then hbar; packed so integer order = monomial order
    std::uint64_t key() const {
        std::uint64_t r = static_cast<std::uint64_t>(degree() & 0xff) << 48;
        for (int i = 0; i < kPolySymbols; ++i) r |= static_cast<std::uint64_t>(exp[i]) << (40 - 8 * i);
        r |= static_cast<std::uint64_t>(static_cast<std::uint16_t>(hexp + 0x8000));
        return r;
    }
    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exp == o.exp && hexp == o.hexp; }
    bool operator<(const Monomial& o) const { return key() < o.key(); }
    bool is_one() const { return degree() == 0 && hexp == 0; }
};

// Element of Q[c,k,gamma,lambda][h,h^-1]; terms sorted by ascending Monomial key.
class PolyScalar {
public:
    using Term = std::pair<Monomial, Rational>;

    PolyScalar() = default;
    PolyScalar(long v);  // NOLINT(google-explicit-constructor)
    PolyScalar(const Rational& q);  // NOLINT(google-explicit-constructor)
    static PolyScalar symbol(Symbol s, int power = 1);
    static PolyScalar hbar_power(int power) { return symbol(Symbol::hbar, power); }
    static PolyScalar from_terms(std::vector<Term> terms);
    static PolyScalar parse(std::string_view text);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    Rational constant_value() const;  // requires is_constant()
    Rational coefficient(const Monomial& m) const;
    int total_degree() const;  // max degree over c,k,gamma,lambda; -1 for zero
    bool has_symbol(Symbol s) const;
    std::pair<int, int> hbar_range() const;  // (min, max) hbar exponent; requires nonzero

    PolyScalar operator-() const;
    PolyScalar& operator+=(const PolyScalar& o);
    PolyScalar& operator-=(const PolyScalar& o);
    PolyScalar& operator*=(const PolyScalar& o);
    PolyScalar& operator*=(const Rational& q);
    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
    friend PolyScalar operator*(PolyScalar a, const Rational& q) { return a *= q; }
    bool operator==(const PolyScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyScalar& o) const { return !(*this == o); }
    bool operator<(const PolyScalar& o) const;  // arbitrary but deterministic

    // Substitutes rationals for any subset of the symbols (hbar included).
    PolyScalar eval_at(const std::map<Symbol, Rational>& values) const;
    // Collects coefficients of powers of hbar.
    std::map<int, PolyScalar> by_hbar() const;
    // Exact division; nullopt when the divisor does not divide.
    std::optional<PolyScalar> divide_exact(const PolyScalar& d) const;

    std::string str() const;
    std::size_t hash() const;

private:
    void normalize();
    std::vector<Term> terms_;
};

std::string to_string(const PolyScalar& p);

// Renders sum of coeff*body with explicit signs: "2 L[-1] L[1] - h[0] + k".
// An empty body marks a scalar term, which is written out term by term.
std::string render_linear(const std::vector<std::pair<PolyScalar, std::string>>& terms);

// Top of a generalized binomial: a rational, or a + b*s for a single symbol s.
class ExponentValue {
public:
    ExponentValue(long v) : offset_(v) {}  // NOLINT(google-explicit-constructor)
    ExponentValue(const Rational& q) : offset_(q) {}  // NOLINT(google-explicit-constructor)
    ExponentValue(Symbol s, Rational slope, Rational offset);
    static ExponentValue from_poly(const PolyScalar& p);

    bool is_rational() const { return !sym_.has_value(); }
    const Rational& offset() const { return offset_; }
    PolyScalar as_poly() const;
    ExponentValue operator+(const Rational& q) const;
    ExponentValue operator-(const Rational& q) const { return *this + Rational(-q); }

private:
    std::optional<Symbol> sym_;
    Rational slope_ = 0;
    Rational offset_ = 0;
};

Rational binom_q(const Rational& alpha, long j);
Rational binom_z(long top, long j);  // integer top, cached
PolyScalar binom(const ExponentValue& alpha, long j);

// Power series in one variable with an explicit truncation order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    static TruncatedSeries one_plus_x_pow(const ExponentValue& alpha, int order, const PolyScalar& scale = 1);

    int order() const { return order_; }
    const PolyScalar& coeff(int n) const;  // throws TruncationError beyond the order
    void set_coeff(int n, PolyScalar v);
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;

private:
    int order_;
    std::vector<PolyScalar> c_;
};

PolyScalar coeff_extract(const TruncatedSeries& f, int n);

}  // namespace zhukit
