#include "fmres/threefold.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fmres {

namespace {

constexpr long long kRationalSurfacePicard = 10;

} // namespace

bool HodgeDiamond::symmetric() const {
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            if (at(p, q) != at(q, p) || at(p, q) != at(3 - p, 3 - q)) return false;
    return true;
}

long long HodgeDiamond::euler() const {
    long long e = 0;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            e += ((p + q) % 2 == 0 ? 1 : -1) * at(p, q);
    return e;
}

ThreefoldReport fiber_product_invariants(const SurfaceConfig& a, const SurfaceConfig& b) {
    require_valid(a);
    require_valid(b);

    std::vector<P1Point> da = a.discriminant();
    std::vector<P1Point> db = b.discriminant();
    std::vector<P1Point> overlap;
    std::set_intersection(da.begin(), da.end(), db.begin(), db.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty()) {
        std::ostringstream os;
        os << "fiber product is singular: discriminants share";
        for (const P1Point& t : overlap) os << " " << t.str();
        throw NotSmooth(os.str());
    }

    ThreefoldReport rep;
    rep.smooth = true;

    // Euler number fiber by fiber: the general fiber is a product of
    // elliptic curves, so only points under a singular fiber contribute,
    // and disjointness kills every product term.
    std::set<P1Point> support(da.begin(), da.end());
    support.insert(db.begin(), db.end());
    rep.euler = 0;
    for (const P1Point& t : support)
        rep.euler += a.fiber_euler(t) * b.fiber_euler(t);

    rep.picard = kRationalSurfacePicard + kRationalSurfacePicard - 1;
    rep.rel_picard = 2;

    const long long h11 = rep.picard;        // Picard rank carries h^{1,1}
    const long long h12 = h11 - rep.euler / 2; // e = 2(h^{1,1} - h^{1,2})

    HodgeDiamond& d = rep.diamond;
    d.h = {};
    d.h[0][0] = d.h[3][3] = 1;
    d.h[3][0] = d.h[0][3] = 1;
    d.h[1][1] = d.h[2][2] = h11;
    d.h[1][2] = d.h[2][1] = h12;

    if (!d.symmetric() || d.euler() != rep.euler)
        throw Error("inconsistent Hodge diamond");

    const bool has_multiple_fiber = a.marked.m > 1 || b.marked.m > 1;
    rep.kodaira_dim = has_multiple_fiber ? 1 : 0;
    if (!has_multiple_fiber)
        rep.note = "no multiple fiber on either factor: the product has trivial "
                   "canonical class (Calabi-Yau case)";
    return rep;
}

SchoenFamily schoen_family(const SurfaceConfig& base, const SurfaceConfig& companion,
                           long long n_members, const PartnerConfigRule& rule) {
    require_valid(base);
    require_valid(companion);
    if (n_members < 1) throw Error("family size must be a positive integer");
    if (base.marked.m % 2 != 0)
        throw InvalidConfig("family construction requires an even multiplicity, got " +
                            std::to_string(base.marked.m));

    FMReport fm = fm_report_for(base);
    if (!fm.fm_count_exact)
        throw InvalidConfig(
            "exact partner count unavailable: n1 = " + std::to_string(fm.assumptions.n1) +
            "; the family needs n1 = 1 (set it explicitly or pick a configuration whose "
            "stabilizer bound is 1)");
    if (*fm.fm_count_exact < n_members) {
        long long suggestion =
            min_even_m_with_bound(base.action(), fm.assumptions.n1, n_members);
        throw InsufficientPartners(
            "only " + std::to_string(*fm.fm_count_exact) + " partner classes at m = " +
                std::to_string(base.marked.m) + ",需要" + std::to_string(n_members),
            suggestion);
    }

    SchoenFamily fam;
    fam.m = base.marked.m;
    fam.partner_reps.assign(fm.partner_reps.begin(),
                            fm.partner_reps.begin() + static_cast<std::ptrdiff_t>(n_members));

    PartnerConfigRule make_partner = rule;
    if (!make_partner)
        make_partner = [](const SurfaceConfig& b, long long rep) {
            SurfaceConfig twisted = b;
            twisted.marked.xi = scalar_mul(rep, b.marked.xi);
            return twisted;
        };

    for (long long rep : fam.partner_reps) {
        ThreefoldReport member = fiber_product_invariants(make_partner(base, rep), companion);
        member.partner_rep = rep;
        member.derived_equivalent_family = true;
        member.non_birational_certificate = {
            "projection to the base is the Iitaka fibration and is unique",
            "relative Picard rank 2 leaves only the two surface factors",
            "distinct partner classes make the elliptic factors non-isomorphic",
        };
        fam.members.push_back(std::move(member));
    }

    // the representatives came one per coset, so distinctness is structural;
    // re-check against the computed partition anyway
    std::vector<UnitGroupSubset> classes = partner_classes(base.action(), base.marked.xi);
    std::set<std::size_t> used_classes;
    for (long long rep : fam.partner_reps)
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].contains(rep)) used_classes.insert(i);

    FamilyCertificate& cert = fam.certificate;
    cert.partner_classes_distinct = used_classes.size() == fam.partner_reps.size();
    cert.non_birational = cert.partner_classes_distinct;
    cert.non_birational_reasons = fam.members.front().non_birational_certificate;
    cert.derived_equivalent = true;      // rank-2 kernel on each fiber product
    cert.deformation_equivalent = true;  // partners deform through elliptic surfaces
    cert.hodge_isometry = true;
    cert.assumptions = {
        "generic fibers of the two factors are not isogenous (unverifiable here; "
        "holds for a general companion)",
        "n1 = " + std::to_string(fm.assumptions.n1) + " for the base surface",
    };
    if (base.aut_order >= 4)
        cert.assumptions.push_back("declared aut_order " + std::to_string(base.aut_order) +
                                   " presumes a constant J-map");
    return fam;
}

} // namespace fmres
