#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cotough {

// Exact non-negative rational in lowest terms. All comparisons cross-multiply
// in 128-bit, so toughness ratios compare exactly at any size we handle.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ < 0) throw std::invalid_argument("Rational: negative value");
        const long long g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator*(long long k, const Rational& r) {
        return Rational(k * r.num_, r.den_);
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    long long num_, den_;
};

// ceil(k / r)
inline long long ceil_div_by(long long k, const Rational& r) {
    if (r.num() == 0) throw std::invalid_argument("ceil_div_by: division by zero");
    const long long a = k * r.den();
    return (a + r.num() - 1) / r.num();
}

// Toughness value: a non-negative rational, or infinite for complete graphs.
class ToughnessValue {
public:
    static ToughnessValue infinite() {
        ToughnessValue t;
        t.infinite_ = true;
        return t;
    }
    static ToughnessValue finite(Rational r) {
        ToughnessValue t;
        t.value_ = r;
        return t;
    }

    bool is_infinite() const { return infinite_; }
    const Rational& ratio() const {
        if (infinite_) throw std::logic_error("ToughnessValue: infinite has no ratio");
        return value_;
    }
    bool at_least(const Rational& t) const { return infinite_ || value_ >= t; }
    bool less_than(const Rational& t) const { return !at_least(t); }

    friend bool operator==(const ToughnessValue& a, const ToughnessValue& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ToughnessValue& a, const ToughnessValue& b) { return !(a == b); }

    std::string str() const { return infinite_ ? "inf" : value_.str(); }

private:
    bool infinite_ = false;
    Rational value_;
};

}  // namespace cotough
