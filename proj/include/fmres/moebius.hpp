#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fmres/p1point.hpp"
#include "fmres/surface.hpp"

namespace fmres {

// Fractional linear map z -> (az+b)/(cz+d) with exact rational entries,
// ad - bc != 0, normalized so the first nonzero of (a,b,c,d) is 1. The
// normalized form is unique per projective class.
struct MoebiusMap {
    Rat a, b, c, d;

    MoebiusMap() : a(1), b(0), c(0), d(1) {}
    MoebiusMap(Rat a_, Rat b_, Rat c_, Rat d_);

    static MoebiusMap identity() { return MoebiusMap(); }

    P1Point apply(const P1Point& z) const;
    MoebiusMap inverse() const;

    bool is_identity() const;

    friend MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g); // f after g
    friend bool operator==(const MoebiusMap& f, const MoebiusMap& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c && f.d == g.d;
    }
    friend bool operator!=(const MoebiusMap& f, const MoebiusMap& g) { return !(f == g); }
    friend bool operator<(const MoebiusMap& f, const MoebiusMap& g);

    std::string str() const;

private:
    void normalize();
};

// the unique map with src[i] -> dst[i]; Degenerate unless each triple
// consists of three distinct points
MoebiusMap map_through_triple(const std::array<P1Point, 3>& src,
                              const std::array<P1Point, 3>& dst);

using LabeledPoint = std::pair<P1Point, std::string>;

// All rational Moebius maps fixing s and permuting the labeled points with
// label preservation. Finite whenever at least two points are given
// (PossiblyInfinite otherwise); the result is a group, sorted canonically.
std::vector<MoebiusMap> stabilizer(const P1Point& s,
                                   const std::vector<LabeledPoint>& labeled_points);

struct N1Bound {
    long long bound = 1;        // stabilizer order; an upper bound for the
                                // induced base-automorphism image
    bool certified_exact = false; // true when three points are individually
                                  // pinned, forcing the image to be trivial
    std::string note;
};

// bound for the configured surface: the stabilizer of s and the labeled
// Jacobian discriminant
N1Bound n1_upper_bound(const SurfaceConfig& cfg);

} // namespace fmres
