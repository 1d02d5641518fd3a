#pragma once

// Exact rational arithmetic on __int128.
//
// The exponent bookkeeping and the Haar-measure values in this library are
// small fractions built from prime powers (q^n with q <= 7, |n| <= ~30) and
// from fractions like 11/18, so 128-bit integers leave a wide safety margin.
// Every operation normalizes (gcd-reduced, positive denominator).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <ostream>

namespace padiclab {

using int128 = __int128_t;

inline int128 int128_abs(int128 x) { return x < 0 ? -x : x; }

inline int128 int128_gcd(int128 a, int128 b) {
    a = int128_abs(a);
    b = int128_abs(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string int128_to_string(int128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    if (neg) x = -x;
    std::string s;
    while (x > 0) {
        s += static_cast<char>('0' + static_cast<int>(x % 10));
        x /= 10;
    }
    if (neg) s += '-';
    return std::string(s.rbegin(), s.rend());
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int128 n, int128 d) : num_(n), den_(d) { normalize(); }

    static Rational of(long long n, long long d) { return Rational(int128(n), int128(d)); }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // q^e with e of either sign
    static Rational int_pow(long long q, int e) {
        if (q == 0) throw std::domain_error("Rational: 0^e");
        int128 p = 1;
        int a = e < 0 ? -e : e;
        for (int i = 0; i < a; ++i) p *= q;
        return e >= 0 ? Rational(p, 1) : Rational(1, p);
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        if (den_ == 1) return int128_to_string(num_);
        return int128_to_string(num_) + "/" + int128_to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        int128 g = int128_gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    int128 num_;
    int128 den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace padiclab
