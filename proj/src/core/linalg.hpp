// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "scalars.hpp"

namespace zhukit {

// Quotient of two PolyScalars, used only by the symbolic fallback on small systems.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(PolyScalar n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(PolyScalar n, PolyScalar d);

    const PolyScalar& num() const { return num_; }
    const PolyScalar& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    bool operator==(const RatFunc& o) const { return (num_ * o.den_) == (o.num_ * den_); }
    std::string str() const;

private:
    void simplify();
    PolyScalar num_, den_;
};

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static bool zero(const Rational& x) { return x == 0; }
    static Rational inv(const Rational& x) { return 1 / x; }
};

template <>
struct FieldOps<RatFunc> {
    static bool zero(const RatFunc& x) { return x.is_zero(); }
    static RatFunc inv(const RatFunc& x) { return RatFunc(x.den(), x.num()); }
};

// Sparse row in column order; smaller column index = more significant.
template <class F>
using SparseRow = std::map<int, F>;

// Incremental row echelon form. Pivot rows are monic and fully inter-reduced on request.
template <class F>
class Echelon {
public:
    // Reduces row against the current pivots (every pivot column is cleared).
    SparseRow<F> reduce(SparseRow<F> row) const {
        auto it = row.begin();
        while (it != row.end()) {
            auto pv = pivots_.find(it->first);
            if (pv == pivots_.end()) {
                ++it;
                continue;
            }
            const F factor = it->second;
            const int col = it->first;
            for (const auto& [c, v] : rows_[pv->second]) {
                auto [jt, fresh] = row.try_emplace(c, F());
                jt->second = jt->second - factor * v;
                if (FieldOps<F>::zero(jt->second)) row.erase(jt);
            }
            it = row.upper_bound(col);
        }
        return row;
    }

    // Inserts a row; returns true when it was independent.
    bool insert(SparseRow<F> row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        const F inv = FieldOps<F>::inv(row.begin()->second);
        for (auto& [c, v] : row) v = v * inv;
        pivots_.emplace(row.begin()->first, rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    bool contains(const SparseRow<F>& row) const { return reduce(row).empty(); }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseRow<F>>& rows() const { return rows_; }
    std::vector<int> pivot_columns() const {
        std::vector<int> out;
        for (const auto& [c, i] : pivots_) out.push_back(c);
        return out;
    }

    // Fully reduced basis sorted by pivot column.
    std::vector<SparseRow<F>> rref() const {
        std::map<int, SparseRow<F>> done;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            SparseRow<F> r = rows_[it->second];
            auto jt = r.upper_bound(it->first);
            while (jt != r.end()) {
                auto dn = done.find(jt->first);
                if (dn == done.end()) {
                    ++jt;
                    continue;
                }
                const F factor = jt->second;
                const int col = jt->first;
                for (const auto& [c, v] : dn->second) {
                    auto [kt, fresh] = r.try_emplace(c, F());
                    kt->second = kt->second - factor * v;
                    if (FieldOps<F>::zero(kt->second)) r.erase(kt);
                }
                jt = r.upper_bound(col);
            }
            done.emplace(it->first, std::move(r));
        }
        std::vector<SparseRow<F>> out;
        for (auto& [c, r] : done) out.push_back(std::move(r));
        return out;
    }

private:
    std::map<int, std::size_t> pivots_;
    std::vector<SparseRow<F>> rows_;
};

// Assigns dense column indices to keys in first-seen order; callers sort beforehand when order matters.
template <class K, class Less = std::less<K>>
class ColumnIndex {
public:
    int index(const K& k) {
        auto [it, fresh] = idx_.try_emplace(k, static_cast<int>(keys_.size()));
        if (fresh) keys_.push_back(k);
        return it->second;
    }
    std::optional<int> find(const K& k) const {
        auto it = idx_.find(k);
        if (it == idx_.end()) return std::nullopt;
        return it->second;
    }
    const K& key(int i) const { return keys_[i]; }
    std::size_t size() const { return keys_.size(); }

private:
    std::map<K, int, Less> idx_;
    std::vector<K> keys_;
};

}  // namespace zhukit
