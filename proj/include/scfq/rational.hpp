#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scfq {

// Exact rational on 128-bit integers; plenty for the desk-scale Lagrange
// interpolations this project performs.
struct Rat {
    __int128 num = 0;
    __int128 den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

    static __int128 gcd(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        __int128 g = gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    long long as_int() const {
        if (den != 1) throw std::domain_error("rational is not an integer");
        return (long long)num;
    }

    double as_double() const { return double(num) / double(den); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) { return Rat(a.num * b.den, a.den * b.num); }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    std::string to_string() const {
        auto i128_str = [](__int128 v) {
            if (v == 0) return std::string("0");
            bool neg = v < 0;
            if (neg) v = -v;
            std::string s;
            while (v) {
                s.push_back(char('0' + int(v % 10)));
                v /= 10;
            }
            if (neg) s.push_back('-');
            return std::string(s.rbegin(), s.rend());
        };
        std::string s = i128_str(num);
        if (den != 1) s += "/" + i128_str(den);
        return s;
    }
};

}  // namespace scfq
