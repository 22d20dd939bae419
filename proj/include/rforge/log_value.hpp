#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "rforge/errors.hpp"

namespace rforge {

// Nonnegative extended real stored as a natural-log magnitude plus a zero
// flag. Everything the bound calculators produce flows through this type so
// quantities like (2n)^(sn) at s=n=100 stay representable.
class LogValue {
public:
    constexpr LogValue() = default; // zero

    static LogValue zero() { return LogValue(); }
    static LogValue one() { return from_log(0.0); }

    static LogValue from_log(double lg) {
        LogValue v;
        v.zero_ = false;
        v.lg_ = lg;
        return v;
    }

    static LogValue from_double(double x) {
        if (x < 0.0 || std::isnan(x)) throw DomainError("LogValue: negative or NaN");
        if (x == 0.0) return zero();
        return from_log(std::log(x));
    }

    bool is_zero() const { return zero_; }

    // Natural log of the magnitude; -inf for zero.
    double log() const { return zero_ ? -std::numeric_limits<double>::infinity() : lg_; }

    // May overflow to +inf for huge magnitudes; that is the caller's problem.
    double value() const { return zero_ ? 0.0 : std::exp(lg_); }

    friend LogValue operator*(LogValue a, LogValue b) {
        if (a.zero_ || b.zero_) return zero();
        return from_log(a.lg_ + b.lg_);
    }

    friend LogValue operator/(LogValue a, LogValue b) {
        if (b.zero_) throw DomainError("LogValue: division by zero");
        if (a.zero_) return zero();
        return from_log(a.lg_ - b.lg_);
    }

    // 0^0 = 1 by convention; 0^negative is a domain error.
    LogValue pow(double e) const {
        if (zero_) {
            if (e > 0.0) return zero();
            if (e == 0.0) return one();
            throw DomainError("LogValue: zero to negative power");
        }
        return from_log(lg_ * e);
    }

    friend LogValue operator+(LogValue a, LogValue b) {
        if (a.zero_) return b;
        if (b.zero_) return a;
        double hi = a.lg_, lo = b.lg_;
        if (hi < lo) std::swap(hi, lo);
        return from_log(hi + std::log1p(std::exp(lo - hi)));
    }

    friend bool operator<(LogValue a, LogValue b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.lg_ < b.lg_;
    }
    friend bool operator>(LogValue a, LogValue b) { return b < a; }
    friend bool operator<=(LogValue a, LogValue b) { return !(b < a); }
    friend bool operator>=(LogValue a, LogValue b) { return !(a < b); }

    static LogValue min(LogValue a, LogValue b) { return a < b ? a : b; }
    static LogValue max(LogValue a, LogValue b) { return a < b ? b : a; }

    std::string str() const {
        if (zero_) return "0";
        if (lg_ > 700.0 || lg_ < -700.0) return "exp(" + std::to_string(lg_) + ")";
        return std::to_string(std::exp(lg_));
    }

private:
    double lg_ = 0.0;
    bool zero_ = true;
};

} // namespace rforge
