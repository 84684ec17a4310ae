#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "charzeta/errors.hpp"

namespace charzeta {

/// Exact rational with int64 parts. All polygon slopes and valuations go
/// through this type; nothing in the library touches floating point.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) fail(Errc::SchemaError, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return make_checked(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make_checked((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) fail(Errc::SchemaError, "rational division by zero");
        return make_checked((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    static Rat make_checked(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        const __int128 lim = (__int128)INT64_MAX;
        if (n > lim || n < -lim || d > lim) fail(Errc::BudgetExceeded, "rational overflow");
        Rat r;
        r.num = (long long)n;
        r.den = (long long)d;
        if (r.num == 0) r.den = 1;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

} // namespace charzeta
