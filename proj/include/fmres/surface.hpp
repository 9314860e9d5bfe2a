#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmres/fm_count.hpp"
#include "fmres/p1point.hpp"
#include "fmres/torsion.hpp"

namespace fmres {

// Kodaira fiber types with their Euler numbers:
//   I_0: 0   I_n: n   II: 2   III: 3   IV: 4
//   I*_n: n+6   IV*: 8   III*: 9   II*: 10
struct KodairaFiber {
    enum class Class { In, IStarN, II, III, IV, IIStar, IIIStar, IVStar };

    Class cls = Class::In;
    long long n = 0; // index for In / I*_n

    KodairaFiber() = default;
    KodairaFiber(Class c, long long index = 0);

    long long euler() const;
    bool is_singular() const { return euler() > 0; }
    bool is_multiplicative() const { return cls == Class::In && n > 0; }
    bool is_additive() const { return is_singular() && !is_multiplicative(); }

    std::string symbol() const;             // "I3", "I0*", "II*", ...
    static KodairaFiber parse(const std::string& s);

    friend bool operator==(const KodairaFiber& a, const KodairaFiber& b) {
        return a.cls == b.cls && a.n == b.n;
    }
};

// The distinguished fiber: the point s, the shape of the local group there,
// the multiplicity m and the local invariant xi (of order m at level m).
struct MarkedFiber {
    P1Point s;
    WCFiberKind kind;
    long long m = 1;
    TorsionPoint xi;
};

// A rational elliptic surface given by its singular-fiber configuration
// over marked points of P^1, the distinguished multiple-fiber datum, and
// the declared order of the fiberwise automorphism group.
struct SurfaceConfig {
    std::vector<std::pair<P1Point, KodairaFiber>> fibers;
    MarkedFiber marked;
    int aut_order = 1;
    std::optional<long long> n1;

    // singular points of the surface itself; includes s whenever m > 1
    // (a non-reduced fiber is singular)
    std::vector<P1Point> discriminant() const;

    // singular points of the associated Jacobian surface: multiplicity
    // stripped, so s appears only when it carries an I_n (n > 0)
    std::vector<P1Point> jacobian_discriminant() const;

    // Euler number of the fiber over t (reduced fiber for the marked point)
    long long fiber_euler(const P1Point& t) const;

    const KodairaFiber* fiber_at(const P1Point& t) const;

    AutAction action() const;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    long long lambda = 1; // least multisection degree; equals m
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    std::vector<std::string> assumptions;
};

ValidationReport validate(const SurfaceConfig& cfg);

void require_valid(const SurfaceConfig& cfg); // throws InvalidConfig with the failing checks

// the family of local invariants: xi at s, zero at every other marked point
std::map<P1Point, TorsionPoint> local_invariants(const SurfaceConfig& cfg);

// partner-count report for the configured surface; n1 is taken from the
// config or, failing that, from the exact stabilizer bound
FMReport fm_report_for(const SurfaceConfig& cfg);
FMReport fm_report_for(const SurfaceConfig& cfg, long long n1_override);

} // namespace fmres
