#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "fmres/errors.hpp"

namespace fmres {

// Exact rational with int64 numerator/denominator, always reduced, den > 0.
// Magnitudes here stay tiny (cross-ratio solves on small inputs), but
// comparisons use 128-bit products anyway.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw Error("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    static Rat parse(const std::string& s) {
        try {
            std::size_t slash = s.find('/');
            std::size_t used = 0;
            if (slash == std::string::npos) {
                long long n = std::stoll(s, &used);
                if (used != s.size()) throw ParseError("trailing characters in rational: " + s);
                return Rat(n);
            }
            long long n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw ParseError("bad numerator in rational: " + s);
            std::string dpart = s.substr(slash + 1);
            long long d = std::stoll(dpart, &used);
            if (used != dpart.size()) throw ParseError("bad denominator in rational: " + s);
            return Rat(n, d);
        } catch (const std::invalid_argument&) {
            throw ParseError("not a rational: " + s);
        } catch (const std::out_of_range&) {
            throw ParseError("rational out of range: " + s);
        }
    }
};

} // namespace fmres
