// SPDX-License-Identifier: Apache-2.0
#include "enveloping.hpp"

#include <cctype>
#include <functional>
#include <numeric>

namespace zhukit {

namespace {

class UPolicy : public SpacePolicy {
public:
    explicit UPolicy(std::optional<long> kill) : kill_(kill) {}
    bool is_free(const ModeOp&) const override { return true; }
    Vector act_base(const ModeOp&, int) const override { return {}; }
    bool word_survives(const Word& w) const override { return !kill_ || positive_part(w) <= *kill_; }
    long base_cap() const override { return 0; }

private:
    std::optional<long> kill_;
};

const Rational kPointValues[3] = {Rational(37, 13), Rational(-5, 7), Rational(11, 3)};

}  // namespace

std::map<Symbol, Rational> specialization_point(int i) {
    i = ((i % 3) + 3) % 3;
    return {{Symbol::c, kPointValues[i]},
            {Symbol::k, kPointValues[(i + 1) % 3]},
            {Symbol::gamma, kPointValues[(i + 2) % 3]},
            {Symbol::lambda, kPointValues[i] + 1}};
}

long word_degree(const Word& w) {
    long s = 0;
    for (const auto& o : w) s += o.mode;
    return s;
}

long positive_part(const Word& w) {
    long s = 0;
    for (const auto& o : w)
        if (o.mode > 0) s += o.mode;
    return s;
}

bool suffix_killed(const Word& w, long p_scaled) {
    // the largest suffix sum of a sorted word is the sum of its positive modes; check every suffix anyway
    long s = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        s += it->mode;
        if (s > p_scaled) return true;
    }
    return false;
}

long element_degree(const UEElement& x) {
    std::optional<long> d;
    for (const auto& [b, c] : x.terms()) {
        long e = word_degree(b.word);
        if (d && *d != e) throw PreconditionError("element is not homogeneous");
        d = e;
    }
    return d.value_or(0);
}

std::size_t filtration(const UEElement& x) {
    std::size_t n = 0;
    for (const auto& [b, c] : x.terms()) n = std::max(n, b.word.size());
    return n;
}

Enveloping::Enveloping(std::shared_ptr<const ModeAlgebra> alg, std::optional<long> level)
    : level_(level), space_(alg, std::make_unique<UPolicy>(level ? std::optional<long>(*level * alg->denom()) : std::nullopt)) {
    if (level && *level < 0) throw PreconditionError("level p must be >= 0");
}

UEElement Enveloping::monomial(const Word& w, const PolyScalar& coeff) const {
    if (!std::is_sorted(w.begin(), w.end())) throw PreconditionError("monomial word must be sorted");
    return Vector::basis(Basis{w}, coeff);
}

UEElement Enveloping::pbw_normalize(const Word& w, const PolyScalar& coeff) const {
    if (coeff.is_zero()) return {};
    return space_.apply_word(w, one()) * coeff;
}

UEElement Enveloping::multiply(const UEElement& x, const UEElement& y) const {
    UEElement r;
    for (const auto& [b, c] : x.terms()) r.add_scaled(space_.apply_word(b.word, y), c);
    return r;
}

std::string Enveloping::render(const UEElement& x) const {
    std::vector<const Vector::Map::value_type*> items;
    for (const auto& t : x.terms()) items.push_back(&t);
    std::stable_sort(items.begin(), items.end(), [](auto* a, auto* b) { return a->first.word.size() > b->first.word.size(); });
    std::vector<std::pair<PolyScalar, std::string>> parts;
    for (auto* t : items) parts.emplace_back(t->second, algebra().render(t->first.word));
    return render_linear(parts);
}

UEElement bracket_modes(const ModeAlgebra& alg, const ModeOp& a, const ModeOp& b) {
    const BracketResult& br = alg.bracket(a, b);
    UEElement r;
    for (const auto& [o, c] : br.ops) r.add(Basis{{o}}, c);
    r.add(Basis{}, br.scalar);
    return r;
}

UEElement zp_reduce(const Enveloping& u, const UEElement& x, long p) {
    if (p < 0) throw PreconditionError("level p must be >= 0");
    if (u.level() && *u.level() != p) throw PreconditionError("enveloping algebra was built for a different level");
    if (element_degree(x) != 0) throw PreconditionError("zp_reduce needs a degree-0 element");
    const long ps = p * u.algebra().denom();
    UEElement r;
    for (const auto& [b, c] : x.terms()) {
        const UEElement nf = u.pbw_normalize(b.word, c);
        for (const auto& [nb, nc] : nf.terms())
            if (!suffix_killed(nb.word, ps)) r.add(nb, nc);
    }
    return r;
}

UEElement zp_multiply(const Enveloping& zp, const UEElement& x, const UEElement& y) {
    if (!zp.level()) throw PreconditionError("zp_multiply needs a level");
    if (element_degree(x) != 0 || element_degree(y) != 0) throw PreconditionError("zp_multiply needs degree-0 elements");
    return zp.multiply(x, y);
}

std::vector<Word> sorted_words(const ModeAlgebra& alg, long lo, long hi, int max_len) {
    std::vector<ModeOp> ops;
    for (long m = lo; m <= hi; ++m)
        for (int g = 0; g < alg.num_generators(); ++g) {
            ModeOp o{static_cast<std::int32_t>(m), static_cast<std::uint16_t>(g)};
            if (alg.valid(o)) ops.push_back(o);
        }
    std::sort(ops.begin(), ops.end());
    std::vector<Word> out{Word{}};
    Word cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < ops.size(); ++i) {
            cur.push_back(ops[i]);
            // odd modes square to a lower-order term, so they appear at most once
            rec(alg.odd(ops[i]) ? i + 1 : i, left - 1);
            cur.pop_back();
        }
    };
    for (int len = 1; len <= max_len; ++len) rec(0, len);
    return out;
}

std::vector<Word> zp_basis(const ModeAlgebra& alg, long p, int cutoff) {
    if (cutoff < 0) throw PreconditionError("cutoff must be >= 0");
    if (p < 0) throw PreconditionError("level p must be >= 0");
    const long ps = p * alg.denom();
    std::vector<Word> out;
    for (auto& w : sorted_words(alg, -ps, ps, cutoff))
        if (word_degree(w) == 0 && !suffix_killed(w, ps)) out.push_back(std::move(w));
    return out;
}

// ---------------------------------------------------------------------------
// expression micro-grammar

namespace {

class ExprParser {
public:
    ExprParser(const ModeAlgebra& alg, std::string_view text) : alg_(alg), s_(text) {}

    std::vector<ParsedTerm> run() {
        std::vector<ParsedTerm> out;
        ws();
        if (pos_ == s_.size()) fail("empty expression");
        bool first = true;
        while (true) {
            ws();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (unicode_minus()) {
                sign = -1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            ParsedTerm t = term();
            t.coeff *= Rational(sign);
            if (!t.coeff.is_zero()) out.push_back(std::move(t));
            ws();
            if (pos_ == s_.size()) break;
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }
    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool unicode_minus() {
        if (s_.substr(pos_, 3) == "\xe2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }
    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || (static_cast<unsigned char>(c) & 0x80); }
    static bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

    long small_int() {
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected an exponent");
        if (pos_ - b > 4) fail_at("exponent too large", b);
        return std::stol(std::string(s_.substr(b, pos_ - b)));
    }

    long exponent() {
        ws();
        if (!peek('^')) return 1;
        ++pos_;
        ws();
        return small_int();
    }

    ParsedTerm term() {
        ParsedTerm t{PolyScalar(1), {}};
        bool any = false;
        while (true) {
            ws();
            if (pos_ == s_.size()) break;
            char c = s_[pos_];
            if (c == '*' && any) {
                ++pos_;
                ws();
                if (pos_ == s_.size() || !(std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || ident_start(s_[pos_])))
                    fail("expected a factor after '*'");
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t b = pos_;
                while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
                try {
                    t.coeff *= parse_rational(s_.substr(b, pos_ - b));
                } catch (const ParseError& e) {
                    fail_at(e.what(), b);
                }
            } else if (c == '(') {
                std::size_t b = ++pos_;
                int depth = 1;
                while (pos_ < s_.size() && depth > 0) {
                    if (s_[pos_] == '(') ++depth;
                    if (s_[pos_] == ')') --depth;
                    ++pos_;
                }
                if (depth != 0) fail_at("unbalanced '('", b - 1);
                try {
                    PolyScalar q = PolyScalar::parse(s_.substr(b, pos_ - 1 - b));
                    long e = exponent();
                    for (long i = 0; i < e; ++i) t.coeff *= q;
                } catch (const ParseError& e) {
                    fail_at(e.what(), b + e.position);
                }
            } else if (ident_start(c)) {
                std::size_t b = pos_;
                while (pos_ < s_.size() && ident_char(s_[pos_]) && !unicode_minus_at(pos_)) ++pos_;
                std::string name(s_.substr(b, pos_ - b));
                ws();
                if (peek('[')) {
                    int g = alg_.spec().generator_index(name);
                    if (g < 0) fail_at("unknown generator '" + name + "'", b);
                    std::size_t mb = ++pos_;
                    while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
                    if (pos_ == s_.size()) fail_at("missing ']'", mb - 1);
                    Rational mode;
                    try {
                        mode = parse_rational(s_.substr(mb, pos_ - mb));
                    } catch (const ParseError&) {
                        fail_at("bad mode index '" + std::string(s_.substr(mb, pos_ - mb)) + "'", mb);
                    }
                    ++pos_;
                    ModeOp o;
                    try {
                        o = alg_.op(g, mode);
                    } catch (const PreconditionError& e) {
                        fail_at(e.what(), b);
                    }
                    long e = exponent();
                    for (long i = 0; i < e; ++i) t.word.push_back(o);
                } else if (auto sym = symbol_from_name(name)) {
                    long e = exponent();
                    t.coeff *= PolyScalar::symbol(*sym, static_cast<int>(e));
                } else {
                    fail_at("unknown generator or symbol '" + name + "'", b);
                }
            } else {
                break;
            }
            any = true;
        }
        if (!any) fail("expected a term");
        return t;
    }

    bool unicode_minus_at(std::size_t at) const { return s_.substr(at, 3) == "\xe2\x88\x92"; }

    const ModeAlgebra& alg_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_expression(const ModeAlgebra& alg, std::string_view text) { return ExprParser(alg, text).run(); }

UEElement evaluate(const Enveloping& u, const std::vector<ParsedTerm>& terms) {
    UEElement r;
    for (const auto& t : terms) r += u.pbw_normalize(t.word, t.coeff);
    return r;
}

// ---------------------------------------------------------------------------
// membership oracle

std::string_view membership_name(Membership m) {
    switch (m) {
        case Membership::in: return "true";
        case Membership::not_in: return "false";
        case Membership::undecided: return "undecided";
    }
    return "?";
}

IdealOracle::IdealOracle(std::shared_ptr<const ModeAlgebra> alg, long p, int length_cutoff, long mode_window, int point)
    : alg_(std::move(alg)), p_(p), length_cutoff_(length_cutoff), window_(mode_window), point_(specialization_point(point)) {
    if (p < 0 || length_cutoff < 1 || mode_window < 0) throw PreconditionError("bad oracle parameters");
    const long D = alg_->denom();
    const long W = mode_window * D;
    Enveloping U(alg_);
    std::vector<Word> words = sorted_words(*alg_, -W, W, length_cutoff);
    std::map<long, std::vector<const Word*>> by_degree;
    for (const auto& w : words) by_degree[word_degree(w)].push_back(&w);
    for (const auto& v : words) {
        const long dv = word_degree(v);
        if (v.empty() || dv <= p * D) continue;
        auto it = by_degree.find(-dv);
        if (it == by_degree.end()) continue;
        for (const Word* u : it->second) {
            if (static_cast<int>(u->size() + v.size()) > length_cutoff) continue;
            UEElement prod = U.space().apply_word(*u, Vector::basis(Basis{v})).eval_at(point_);
            ++products_;
            ech_.insert(row_of(prod, true));
        }
    }
}

SparseRow<Rational> IdealOracle::row_of(const UEElement& x, bool extend) const {
    SparseRow<Rational> row;
    for (const auto& [b, c] : x.terms()) {
        Rational v = c.eval_at(point_).constant_value();
        if (v == 0) continue;
        int col;
        if (extend) {
            col = cols_.index(b.word);
        } else {
            auto f = cols_.find(b.word);
            col = f ? *f : -1 - static_cast<int>(row.size());
        }
        row[col] += v;
    }
    return row;
}

Membership IdealOracle::test(const UEElement& x) const {
    const long W = window_ * alg_->denom();
    if (element_degree(x) != 0) throw PreconditionError("membership test needs a degree-0 element");
    if (static_cast<int>(filtration(x)) > length_cutoff_) return Membership::undecided;
    for (const auto& [b, c] : x.terms())
        for (const auto& o : b.word)
            if (o.mode < -W || o.mode > W) return Membership::undecided;
    SparseRow<Rational> row = row_of(x, false);
    if (!row.empty() && row.begin()->first < 0) return Membership::not_in;  // a word no product reaches
    return ech_.contains(row) ? Membership::in : Membership::not_in;
}

Membership ideal_membership(std::shared_ptr<const ModeAlgebra> alg, const UEElement& x, long p, int length_cutoff, long mode_window) {
    return IdealOracle(std::move(alg), p, length_cutoff, mode_window).test(x);
}

// ---------------------------------------------------------------------------
// relation discovery

namespace {

using GenWord = std::vector<int>;

template <class F>
struct Conv;

template <>
struct Conv<Rational> {
    std::map<Symbol, Rational> point;
    Rational operator()(const PolyScalar& c) const { return c.eval_at(point).constant_value(); }
};

template <>
struct Conv<RatFunc> {
    RatFunc operator()(const PolyScalar& c) const { return RatFunc(c); }
};

// Relations among the normal forms, one per dependent word, reduced modulo consequences u r v of earlier
// ones. Rows live in word space with column N-1-i for word i so the pivot is the largest word.
template <class F>
std::vector<SparseRow<F>> eliminate(const std::vector<GenWord>& words, const std::map<GenWord, int>& index, const std::vector<UEElement>& nf,
                                    const Conv<F>& conv, int cutoff) {
    const int N = static_cast<int>(words.size());
    std::map<Basis, int> nf_cols;
    for (const auto& v : nf)
        for (const auto& [b, c] : v.terms()) nf_cols.emplace(b, 0);
    int k = 0;
    for (auto& [b, i] : nf_cols) i = k++;
    const int tag0 = k;

    Echelon<F> E;
    Echelon<F> C;
    std::vector<SparseRow<F>> accepted;
    for (int i = 0; i < N; ++i) {
        SparseRow<F> row;
        for (const auto& [b, c] : nf[i].terms()) {
            F v = conv(c);
            if (!FieldOps<F>::zero(v)) row[nf_cols.at(b)] = v;
        }
        row[tag0 + (N - 1 - i)] = F(Rational(1));
        SparseRow<F> red = E.reduce(row);
        if (red.empty() || red.begin()->first < tag0) {
            E.insert(std::move(red));
            continue;
        }
        SparseRow<F> rel;
        for (const auto& [c, v] : red) rel[c - tag0] = v;
        rel = C.reduce(std::move(rel));
        if (rel.empty()) continue;
        const F inv = FieldOps<F>::inv(rel.begin()->second);
        for (auto& [c, v] : rel) v = v * inv;
        accepted.push_back(rel);
        // consequences u rel v within the cutoff
        std::size_t len = 0;
        for (const auto& [c, v] : rel) len = std::max(len, words[N - 1 - c].size());
        for (int a = 0; a < N; ++a) {
            if (words[a].size() + len > static_cast<std::size_t>(cutoff)) continue;
            for (int b = 0; b < N; ++b) {
                if (words[a].size() + words[b].size() + len > static_cast<std::size_t>(cutoff)) continue;
                SparseRow<F> cons;
                for (const auto& [c, v] : rel) {
                    GenWord w = words[a];
                    const GenWord& mid = words[N - 1 - c];
                    w.insert(w.end(), mid.begin(), mid.end());
                    w.insert(w.end(), words[b].begin(), words[b].end());
                    cons[N - 1 - index.at(w)] = v;
                }
                C.insert(std::move(cons));
            }
        }
    }
    return accepted;
}

Rational content_lcm(const std::vector<Rational>& xs) {
    mpz_class den = 1, num = 0;
    for (const auto& x : xs) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    }
    Rational r(den, num);
    r.canonicalize();
    return r;
}

std::map<int, PolyScalar> normalize_rational(const SparseRow<Rational>& rel) {
    std::vector<Rational> xs;
    for (const auto& [c, v] : rel) xs.push_back(v);
    Rational f = content_lcm(xs);
    if (rel.begin()->second < 0) f = -f;
    std::map<int, PolyScalar> out;
    for (const auto& [c, v] : rel) out[c] = PolyScalar(Rational(v * f));
    return out;
}

std::map<int, PolyScalar> normalize_symbolic(const SparseRow<RatFunc>& rel) {
    PolyScalar den(1);
    for (const auto& [c, v] : rel) {
        if (v.den() == PolyScalar(1)) continue;
        if (!(den.divide_exact(v.den()))) den *= v.den();
    }
    std::map<int, PolyScalar> out;
    std::vector<Rational> xs;
    for (const auto& [c, v] : rel) {
        PolyScalar p = v.num() * den;
        auto q = p.divide_exact(v.den());
        if (!q) throw ZhukitError("internal: denominator clearing failed");
        out[c] = *q;
        for (const auto& t : q->terms()) xs.push_back(t.second);
    }
    Rational f = content_lcm(xs);
    // make the leading coefficient's top term positive
    if (out.begin()->second.terms().back().second < 0) f = -f;
    for (auto& [c, v] : out) v *= f;
    return out;
}

}  // namespace

std::string render_generator_word(const std::vector<ZpGenerator>& gens, const std::vector<int>& w) {
    if (w.empty()) return "";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += ' ';
        s += gens[w[i]].name;
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

RelationSearch find_relations(const Enveloping& zp, const std::vector<ZpGenerator>& gens, int cutoff) {
    if (!zp.level()) throw PreconditionError("find_relations needs a level");
    if (cutoff < 0) throw PreconditionError("cutoff must be >= 0");
    RelationSearch out;
    const int n = static_cast<int>(gens.size());
    for (const auto& g : gens)
        if (element_degree(g.value) != 0) throw PreconditionError("generator " + g.name + " does not have degree 0");

    // words ordered by length, then lexicographically with later generators larger
    std::vector<GenWord> words{GenWord{}};
    for (int len = 1, start = 0; len <= cutoff; ++len) {
        const int end = static_cast<int>(words.size());
        for (int i = start; i < end; ++i)
            for (int g = 0; g < n; ++g) {
                GenWord w = words[i];
                w.push_back(g);
                words.push_back(std::move(w));
            }
        start = end;
    }
    std::map<GenWord, int> index;
    for (int i = 0; i < static_cast<int>(words.size()); ++i) index.emplace(words[i], i);
    const int N = static_cast<int>(words.size());
    out.words_evaluated = words.size();

    std::vector<UEElement> nf(N);
    nf[0] = zp.one();
    for (int i = 1; i < N; ++i) {
        GenWord rest(words[i].begin() + 1, words[i].end());
        nf[i] = zp.multiply(gens[words[i][0]].value, nf[index.at(rest)]);
    }

    std::vector<std::vector<std::map<int, PolyScalar>>> runs;
    for (int pt = 0; pt < kSpecializationPoints; ++pt) {
        std::vector<std::map<int, PolyScalar>> rels;
        for (const auto& r : eliminate<Rational>(words, index, nf, Conv<Rational>{specialization_point(pt)}, cutoff)) rels.push_back(normalize_rational(r));
        runs.push_back(std::move(rels));
    }
    std::vector<std::map<int, PolyScalar>> chosen = runs[0];
    if (runs[0] != runs[1] || runs[0] != runs[2]) {
        out.notes.push_back("specializations disagree; using symbolic elimination");
        if (N > 400) throw PreconditionError("relation search too large for symbolic elimination (" + std::to_string(N) + " words)");
        chosen.clear();
        for (const auto& r : eliminate<RatFunc>(words, index, nf, Conv<RatFunc>{}, cutoff)) chosen.push_back(normalize_symbolic(r));
        out.symbolic = true;
    }
    for (const auto& rel : chosen) {
        Relation r;
        std::vector<std::pair<PolyScalar, std::string>> parts;
        for (const auto& [c, v] : rel) {
            const GenWord& w = words[N - 1 - c];
            r.terms.emplace_back(w, v);
            parts.emplace_back(v, render_generator_word(gens, w));
        }
        r.text = render_linear(parts);
        out.relations.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// filtered quotients of U(g_0)

namespace {

std::vector<long> quotient_dims_at(const ModeAlgebra& alg, const Enveloping& U, const std::vector<UEElement>& gens, int max_filtration, int depth) {
    std::vector<Word> words = sorted_words(alg, 0, 0, depth);
    // columns: longer words first so a pivot's length is the filtration degree of its row
    std::vector<Word> order = words;
    std::stable_sort(order.begin(), order.end(), [](const Word& a, const Word& b) { return a.size() > b.size(); });
    std::map<Word, int> col;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) col.emplace(order[i], i);
    const auto point = specialization_point(0);

    Echelon<Rational> E;
    for (const auto& g : gens) {
        const std::size_t fg = filtration(g);
        for (const auto& x : words) {
            if (x.size() + fg > static_cast<std::size_t>(depth)) continue;
            for (const auto& y : words) {
                if (x.size() + fg + y.size() > static_cast<std::size_t>(depth)) continue;
                UEElement gy = U.multiply(g, Vector::basis(Basis{y}));
                UEElement prod = U.space().apply_word(x, gy).eval_at(point);
                SparseRow<Rational> row;
                for (const auto& [b, c] : prod.terms()) {
                    auto it = col.find(b.word);
                    if (it == col.end()) throw PreconditionError("ideal generators must only use mode-0 operators");
                    row[it->second] = c.constant_value();
                }
                E.insert(std::move(row));
            }
        }
    }
    std::vector<long> dims(max_filtration + 1, 0);
    std::vector<long> pivots_by_len(depth + 1, 0);
    for (int c : E.pivot_columns()) ++pivots_by_len[order[c].size()];
    long total = 0, removed = 0;
    std::vector<long> count_by_len(depth + 1, 0);
    for (const auto& w : words) ++count_by_len[w.size()];
    for (int d = 0; d <= max_filtration; ++d) {
        total += count_by_len[d];
        removed += pivots_by_len[d];
        dims[d] = total - removed;
    }
    return dims;
}

}  // namespace

QuotientDims quotient_dim_sequence(std::shared_ptr<const ModeAlgebra> alg, const std::vector<UEElement>& gens, int max_filtration) {
    if (max_filtration < 0) throw PreconditionError("max_filtration must be >= 0");
    for (const auto& g : gens)
        for (const auto& [b, c] : g.terms())
            for (const auto& o : b.word)
                if (o.mode != 0) throw PreconditionError("ideal generators must only use mode-0 operators");
    Enveloping U(alg);
    QuotientDims out;
    std::vector<long> prev;
    for (int slack = 0; slack <= 6; ++slack) {
        std::vector<long> dims = quotient_dims_at(*alg, U, gens, max_filtration, max_filtration + slack);
        out.dims = dims;
        out.slack = slack;
        if (slack > 0 && dims == prev) {
            out.converged = true;
            break;
        }
        prev = std::move(dims);
    }
    return out;
}

}  // namespace zhukit
