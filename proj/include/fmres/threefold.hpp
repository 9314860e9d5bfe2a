#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "fmres/surface.hpp"

namespace fmres {

struct HodgeDiamond {
    // h[p][q] for 0 <= p,q <= 3
    std::array<std::array<long long, 4>, 4> h{};

    long long at(int p, int q) const { return h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]; }

    bool symmetric() const;   // h^{p,q} = h^{q,p} = h^{3-p,3-q}
    long long euler() const;  // sum of (-1)^{p+q} h^{p,q}

    friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) { return a.h == b.h; }
};

// Invariants of the fiber product of two rational elliptic surfaces over
// the projective line with disjoint discriminants.
struct ThreefoldReport {
    HodgeDiamond diamond;
    long long euler = 0;
    int kodaira_dim = 1;
    long long picard = 19;     // rho(S) + rho(S') - 1 with rho = 10 each
    long long rel_picard = 2;
    bool smooth = true;
    long long partner_rep = 1; // twist index of the first factor
    bool derived_equivalent_family = false;
    std::vector<std::string> non_birational_certificate;
    std::string note;
};

ThreefoldReport fiber_product_invariants(const SurfaceConfig& a, const SurfaceConfig& b);

struct FamilyCertificate {
    bool partner_classes_distinct = false;
    bool non_birational = false;
    std::vector<std::string> non_birational_reasons;
    bool derived_equivalent = false;
    bool deformation_equivalent = false;
    bool hodge_isometry = false;
    std::vector<std::string> assumptions;
};

struct SchoenFamily {
    long long m = 0;
    std::vector<long long> partner_reps;
    std::vector<ThreefoldReport> members;
    FamilyCertificate certificate;
};

// builds a partner configuration from a coset representative; the default
// replaces the local invariant xi by k*xi
using PartnerConfigRule = std::function<SurfaceConfig(const SurfaceConfig& base, long long rep)>;

// N pairwise non-isomorphic fiber products: one partner per coset class of
// the base surface, each crossed with the companion. Requires even m and an
// exact partner count of at least N.
SchoenFamily schoen_family(const SurfaceConfig& base, const SurfaceConfig& companion,
                           long long n_members, const PartnerConfigRule& rule = {});

} // namespace fmres
