// SPDX-License-Identifier: Apache-2.0
#include "linalg.hpp"

namespace zhukit {

RatFunc::RatFunc(PolyScalar n, PolyScalar d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
    simplify();
}

void RatFunc::simplify() {
    if (num_.is_zero()) {
        den_ = PolyScalar(1);
        return;
    }
    if (den_.is_constant()) {
        num_ *= Rational(1 / den_.constant_value());
        den_ = PolyScalar(1);
        return;
    }
    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = PolyScalar(1);
        return;
    }
    if (auto q = den_.divide_exact(num_)) {
        num_ = PolyScalar(1);
        den_ = std::move(*q);
    }
    // keep the denominator's leading coefficient at 1 so equal values look alike
    Rational lead = den_.terms().back().second;
    if (lead != 1) {
        num_ *= Rational(1 / lead);
        den_ *= Rational(1 / lead);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw PreconditionError("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str() const {
    if (den_ == PolyScalar(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace zhukit
