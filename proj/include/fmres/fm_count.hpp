#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fmres/rational.hpp"
#include "fmres/wc_action.hpp"

namespace fmres {

// Euler's totient, via trial-division factorization.
long long totient(long long m);

// residues in [0,m) coprime to m, ascending ({0} for m = 1)
std::vector<long long> units_mod(long long m);

struct UnitGroupSubset {
    long long modulus = 1;
    std::vector<long long> members; // sorted

    bool contains(long long k) const;

    friend bool operator==(const UnitGroupSubset& a, const UnitGroupSubset& b) {
        return a.modulus == b.modulus && a.members == b.members;
    }
};

// I' = { units k mod m : k*xi lies in the action orbit of xi }, a subgroup
// of (Z/m)*. Requires xi primitive: order(xi) == xi.modulus.
UnitGroupSubset i_prime(const AutAction& act, const TorsionPoint& xi);

struct FMAssumptions {
    long long n1 = 1;   // asserted or stabilizer-derived order of the induced base-automorphism image
    int aut_order = 1;
};

// Partner-count report for one multiplicity m. The exact count is present
// only when it is certified (m <= 2, or n1 = 1); the lower bound
// phi(m)/n0 with n0 = n1 * aut_order holds unconditionally.
struct FMReport {
    long long m = 1;
    long long phi_m = 1;
    UnitGroupSubset iprime;
    std::optional<long long> fm_count_exact;
    Rat lower_bound;
    std::vector<long long> partner_reps; // smallest residue per coset, present with the exact count
    long long n0 = 1;
    long long n2_bound = 1; // cokernel order is at most n1
    FMAssumptions assumptions;
};

FMReport fm_number(const AutAction& act, const TorsionPoint& xi, long long n1);

// partition of (Z/m)* into cosets k*I'; one coset per partner class,
// ordered by smallest representative
std::vector<UnitGroupSubset> partner_classes(const AutAction& act, const TorsionPoint& xi);

// the default family rule: (1,) at rank 1, (1,1) at rank 2 -- primitive at
// every level
TorsionPoint default_sweep_invariant(const WCFiberKind& kind, long long m);

struct SweepTable {
    std::vector<FMReport> rows;       // ordered by m
    std::vector<long long> skipped;   // levels where the rule gave a non-primitive point
};

using SweepRule = std::function<TorsionPoint(long long m)>;

SweepTable sweep(const AutAction& act, long long m_lo, long long m_hi,
                 long long n1 = 1, const SweepRule& rule = {});

// smallest even m whose unconditional bound phi(m)/(n1*aut_order) reaches
// the target
long long min_even_m_with_bound(const AutAction& act, long long n1, long long target);

} // namespace fmres
