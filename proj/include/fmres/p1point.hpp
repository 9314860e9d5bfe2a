#pragma once

#include <string>

#include "fmres/rational.hpp"

namespace fmres {

// A point of the projective line: an exact rational or the point at infinity.
struct P1Point {
    bool infinite = false;
    Rat value;

    P1Point() = default;
    P1Point(Rat v) : infinite(false), value(v) {}
    P1Point(long long v) : infinite(false), value(v) {}

    static P1Point inf() {
        P1Point p;
        p.infinite = true;
        return p;
    }

    friend bool operator==(const P1Point& a, const P1Point& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
    friend bool operator!=(const P1Point& a, const P1Point& b) { return !(a == b); }

    // infinity sorts after all finite points
    friend bool operator<(const P1Point& a, const P1Point& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }

    std::string str() const { return infinite ? "inf" : value.str(); }

    static P1Point parse(const std::string& s) {
        if (s == "inf" || s == "oo") return inf();
        return P1Point(Rat::parse(s));
    }
};

} // namespace fmres
