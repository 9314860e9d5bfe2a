#include "fmres/fm_count.hpp"

#include <algorithm>
#include <numeric>

namespace fmres {

long long totient(long long m) {
    if (m < 1) throw Error("totient needs m >= 1");
    long long result = m;
    long long n = m;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        result -= result / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long long> units_mod(long long m) {
    std::vector<long long> u;
    for (long long k = 0; k < m; ++k)
        if (std::gcd(k, m) == 1) u.push_back(k);
    if (u.empty()) u.push_back(0); // m = 1
    return u;
}

bool UnitGroupSubset::contains(long long k) const {
    long long r = k % modulus;
    if (r < 0) r += modulus;
    return std::binary_search(members.begin(), members.end(), r);
}

namespace {

// all k in [0,m) with k*a == target (mod m); gcd(a,m) solutions or none
std::vector<long long> solve_linear_congruence(long long a, long long target, long long m) {
    long long d = std::gcd(a, m);
    if (target % d != 0) return {};
    long long m0 = m / d;
    long long a0 = (a / d) % m0;
    long long t0 = (target / d) % m0;
    // inverse of a0 mod m0 by extended Euclid
    long long r0 = m0, r1 = a0, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1; r0 = r1; r1 = r2;
        long long s2 = s0 - q * s1; s0 = s1; s1 = s2;
    }
    long long inv = s0 % m0;
    if (inv < 0) inv += m0;
    long long base = m0 == 1 ? 0 : (inv * t0) % m0;
    std::vector<long long> sols;
    sols.reserve(static_cast<std::size_t>(d));
    for (long long j = 0; j < d; ++j) sols.push_back(base + j * m0);
    return sols;
}

void require_primitive(const TorsionPoint& xi) {
    if (order(xi) != xi.modulus)
        throw NotPrimitive("invariant " + xi.str() + " has order " +
                           std::to_string(order(xi)) + ", expected the full level " +
                           std::to_string(xi.modulus));
}

} // namespace

UnitGroupSubset i_prime(const AutAction& act, const TorsionPoint& xi) {
    require_primitive(xi);
    const long long m = xi.modulus;

    UnitGroupSubset out;
    out.modulus = m;
    if (m == 1) {
        out.members = {0};
        return out;
    }

    // Since xi has full order, k |-> k*xi is injective on Z/m: each orbit
    // element is hit by at most one k. Pivot on the coordinate with the
    // smallest gcd and filter candidates on the remaining coordinate.
    std::size_t pivot = 0;
    long long best = std::gcd(xi.coords[0], m);
    for (std::size_t j = 1; j < xi.coords.size(); ++j) {
        long long g = std::gcd(xi.coords[j], m);
        if (g < best) { best = g; pivot = j; }
    }

    for (const TorsionPoint& q : orbit(act, xi)) {
        for (long long k : solve_linear_congruence(xi.coords[pivot], q.coords[pivot], m)) {
            if (std::gcd(k, m) != 1) continue;
            if (scalar_mul(k, xi) == q) out.members.push_back(k);
        }
    }
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

std::vector<UnitGroupSubset> partner_classes(const AutAction& act, const TorsionPoint& xi) {
    UnitGroupSubset sub = i_prime(act, xi);
    const long long m = xi.modulus;
    std::vector<long long> units = units_mod(m);
    std::vector<char> covered(static_cast<std::size_t>(m), 0);

    std::vector<UnitGroupSubset> classes;
    for (long long u : units) {
        if (covered[static_cast<std::size_t>(u)]) continue;
        UnitGroupSubset cls;
        cls.modulus = m;
        for (long long g : sub.members) {
            long long v = m == 1 ? 0 : (u * g) % m;
            cls.members.push_back(v);
            covered[static_cast<std::size_t>(v)] = 1;
        }
        std::sort(cls.members.begin(), cls.members.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

FMReport fm_number(const AutAction& act, const TorsionPoint& xi, long long n1) {
    if (n1 < 1) throw Error("n1 must be a positive integer");
    FMReport rep;
    rep.m = xi.modulus;
    rep.phi_m = totient(rep.m);
    rep.iprime = i_prime(act, xi); // also checks primitivity
    rep.n0 = n1 * act.group_order;
    rep.n2_bound = n1;
    rep.lower_bound = Rat(rep.phi_m, rep.n0);
    rep.assumptions = {n1, act.group_order};

    if (rep.m <= 2) {
        // a surface without multiple fibers, or with one of multiplicity 2,
        // is its own only partner
        rep.fm_count_exact = 1;
        rep.partner_reps = {rep.m == 1 ? 0 : 1};
    } else if (n1 == 1) {
        rep.fm_count_exact = rep.phi_m / static_cast<long long>(rep.iprime.members.size());
        for (const UnitGroupSubset& cls : partner_classes(act, xi))
            rep.partner_reps.push_back(cls.members.front());
    }
    return rep;
}

TorsionPoint default_sweep_invariant(const WCFiberKind& kind, long long m) {
    switch (kind.rank()) {
        case 1: return TorsionPoint(m, {1});
        case 2: return TorsionPoint(m, {1, 1});
        default:
            if (m != 1) throw KindMismatch("trivial fiber kind admits only level 1");
            return TorsionPoint(1, {0});
    }
}

SweepTable sweep(const AutAction& act, long long m_lo, long long m_hi,
                 long long n1, const SweepRule& rule) {
    SweepTable table;
    for (long long m = std::max<long long>(1, m_lo); m <= m_hi; ++m) {
        TorsionPoint xi = rule ? rule(m) : default_sweep_invariant(act.fiber_kind, m);
        if (order(xi) != xi.modulus || xi.modulus != m) {
            table.skipped.push_back(m);
            continue;
        }
        table.rows.push_back(fm_number(act, xi, n1));
    }
    return table;
}

long long min_even_m_with_bound(const AutAction& act, long long n1, long long target) {
    if (target < 1) throw Error("target must be a positive integer");
    const long long n0 = n1 * act.group_order;
    for (long long m = 2;; m += 2)
        if (totient(m) >= target * n0) return m;
}

} // namespace fmres
