#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qk {

// Exact rational number on int64 with overflow trapping.
// All arithmetic in the library goes through this type; there are no
// floating point numbers anywhere.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(parse_ll(s));
        return Rat(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat::make(add_chk(mul_chk(a.num_, b.den_), mul_chk(b.num_, a.den_)),
                         mul_chk(a.den_, b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat::make(sub_chk(mul_chk(a.num_, b.den_), mul_chk(b.num_, a.den_)),
                         mul_chk(a.den_, b.den_));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat::make(mul_chk(a.num_, b.num_), mul_chk(a.den_, b.den_));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat::make(mul_chk(a.num_, b.den_), mul_chk(a.den_, b.num_));
    }
    Rat operator-() const { return Rat::make(-num_, den_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long long num_, den_;

    static Rat make(long long n, long long d) {
        Rat r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
    static long long parse_ll(const std::string& s) {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("Rat: bad literal '" + s + "'");
        return v;
    }
    static long long add_chk(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rat: overflow");
        return r;
    }
    static long long sub_chk(long long a, long long b) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("Rat: overflow");
        return r;
    }
    static long long mul_chk(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rat: overflow");
        return r;
    }
};

} // namespace qk
