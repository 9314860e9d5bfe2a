#pragma once

#include <string>
#include <vector>

#include "fmres/errors.hpp"

namespace fmres {

// Element of the m-torsion of (Q/Z)^r, r in {1,2}: coordinate j stores the
// residue a_j of a_j/m. All arithmetic is exact mod the declared level m.
struct TorsionPoint {
    long long modulus = 1;
    std::vector<long long> coords;

    TorsionPoint() : coords{0} {}
    TorsionPoint(long long m, std::vector<long long> c);

    static TorsionPoint zero(int rank, long long m = 1);

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
        return a.modulus == b.modulus && a.coords == b.coords;
    }
    friend bool operator!=(const TorsionPoint& a, const TorsionPoint& b) { return !(a == b); }
    friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
        if (a.modulus != b.modulus) return a.modulus < b.modulus;
        return a.coords < b.coords;
    }

    std::string str() const;
};

// least d >= 1 with d*p = 0; the lcm of the component orders m/gcd(m, a_j)
long long order(const TorsionPoint& p);

TorsionPoint scalar_mul(long long k, const TorsionPoint& p);

// componentwise sum; mismatched levels embed into Q/Z at the lcm level
TorsionPoint add(const TorsionPoint& p, const TorsionPoint& q);

// The three shapes of the local group WC(B_s): (Q/Z)^2 over a smooth fiber,
// Q/Z over a multiplicative fiber I_n (n>0), zero otherwise.
struct WCFiberKind {
    enum class Tag { SmoothElliptic, MultiplicativeIn, Trivial };

    Tag tag = Tag::SmoothElliptic;
    long long n = 0; // I_n index, meaningful for MultiplicativeIn only

    static WCFiberKind smooth() { return {Tag::SmoothElliptic, 0}; }
    static WCFiberKind multiplicative(long long n);
    static WCFiberKind trivial() { return {Tag::Trivial, 0}; }

    // torsion rank of the local group: 2, 1 or 0
    int rank() const;

    friend bool operator==(const WCFiberKind& a, const WCFiberKind& b) {
        return a.tag == b.tag && a.n == b.n;
    }

    std::string str() const;
    static WCFiberKind parse(const std::string& s);
};

} // namespace fmres
