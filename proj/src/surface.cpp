#include "fmres/surface.hpp"

#include <algorithm>
#include <sstream>

#include "fmres/moebius.hpp"

namespace fmres {

KodairaFiber::KodairaFiber(Class c, long long index) : cls(c), n(index) {
    if (cls == Class::In || cls == Class::IStarN) {
        if (n < 0) throw ParseError("fiber index must be >= 0");
    } else if (n != 0) {
        throw ParseError("only I_n and I*_n carry an index");
    }
}

long long KodairaFiber::euler() const {
    switch (cls) {
        case Class::In: return n;
        case Class::IStarN: return n + 6;
        case Class::II: return 2;
        case Class::III: return 3;
        case Class::IV: return 4;
        case Class::IVStar: return 8;
        case Class::IIIStar: return 9;
        case Class::IIStar: return 10;
    }
    return 0;
}

std::string KodairaFiber::symbol() const {
    switch (cls) {
        case Class::In: return "I" + std::to_string(n);
        case Class::IStarN: return "I" + std::to_string(n) + "*";
        case Class::II: return "II";
        case Class::III: return "III";
        case Class::IV: return "IV";
        case Class::IIStar: return "II*";
        case Class::IIIStar: return "III*";
        case Class::IVStar: return "IV*";
    }
    return "?";
}

KodairaFiber KodairaFiber::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != '_') s.push_back(c); // accept I_1 for I1
    if (s == "II") return {Class::II};
    if (s == "III") return {Class::III};
    if (s == "IV") return {Class::IV};
    if (s == "II*") return {Class::IIStar};
    if (s == "III*") return {Class::IIIStar};
    if (s == "IV*") return {Class::IVStar};
    if (s.size() >= 2 && s[0] == 'I' && (std::isdigit(s[1]) != 0)) {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c) != 0; })) {
            long long n = std::stoll(digits);
            return {star ? Class::IStarN : Class::In, n};
        }
    }
    throw ParseError("unknown Kodaira symbol: " + raw);
}

std::vector<P1Point> SurfaceConfig::discriminant() const {
    std::vector<P1Point> pts = jacobian_discriminant();
    if (marked.m > 1 && std::find(pts.begin(), pts.end(), marked.s) == pts.end())
        pts.push_back(marked.s);
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<P1Point> SurfaceConfig::jacobian_discriminant() const {
    std::vector<P1Point> pts;
    for (const auto& [pt, fiber] : fibers)
        if (fiber.is_singular()) pts.push_back(pt);
    std::sort(pts.begin(), pts.end());
    return pts;
}

const KodairaFiber* SurfaceConfig::fiber_at(const P1Point& t) const {
    for (const auto& [pt, fiber] : fibers)
        if (pt == t) return &fiber;
    return nullptr;
}

long long SurfaceConfig::fiber_euler(const P1Point& t) const {
    const KodairaFiber* f = fiber_at(t);
    return f ? f->euler() : 0;
}

AutAction SurfaceConfig::action() const {
    return AutAction(aut_order, marked.kind);
}

namespace {

void add_check(ValidationReport& rep, const std::string& name, bool passed,
               const std::string& detail) {
    rep.checks.push_back({name, passed, detail});
    if (!passed) rep.ok = false;
}

} // namespace

ValidationReport validate(const SurfaceConfig& cfg) {
    ValidationReport rep;
    rep.ok = true;
    rep.lambda = cfg.marked.m;

    // marked points pairwise distinct
    {
        bool distinct = true;
        std::string dup;
        for (std::size_t i = 0; i < cfg.fibers.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < cfg.fibers.size(); ++j)
                if (cfg.fibers[i].first == cfg.fibers[j].first) {
                    distinct = false;
                    dup = cfg.fibers[i].first.str();
                    break;
                }
        add_check(rep, "points_distinct", distinct,
                  distinct ? "all fiber base points distinct" : "duplicate base point " + dup);
    }

    // Euler numbers of the singular fibers must sum to 12
    {
        long long sum = 0;
        for (const auto& [pt, fiber] : cfg.fibers) sum += fiber.euler();
        add_check(rep, "euler_sum", sum == 12,
                  "singular-fiber Euler numbers sum to " + std::to_string(sum));
    }

    // the marked invariant must be primitive at its level
    {
        bool prim = cfg.marked.xi.modulus == cfg.marked.m && order(cfg.marked.xi) == cfg.marked.m;
        add_check(rep, "xi_order", prim,
                  "invariant " + cfg.marked.xi.str() + " has order " +
                      std::to_string(order(cfg.marked.xi)) + " at level " +
                      std::to_string(cfg.marked.xi.modulus) + ", multiplicity " +
                      std::to_string(cfg.marked.m));
    }

    // fiber kind at s against the listed fiber there
    {
        const KodairaFiber* at_s = cfg.fiber_at(cfg.marked.s);
        bool okind = true;
        std::string detail;
        switch (cfg.marked.kind.tag) {
            case WCFiberKind::Tag::SmoothElliptic:
                okind = at_s == nullptr || !at_s->is_singular();
                detail = okind ? "s lies outside the discriminant"
                               : "kind smooth but fiber " + at_s->symbol() + " sits at s";
                break;
            case WCFiberKind::Tag::MultiplicativeIn:
                okind = at_s != nullptr && at_s->is_multiplicative() &&
                        cfg.marked.kind.n == at_s->n;
                detail = okind ? "fiber I" + std::to_string(at_s->n) + " at s"
                               : "kind In requires a matching I_n (n>0) fiber at s";
                break;
            case WCFiberKind::Tag::Trivial:
                okind = at_s != nullptr && at_s->is_additive();
                detail = okind ? "additive fiber " + at_s->symbol() + " at s (zero local group)"
                               : "kind trivial requires an additive fiber at s";
                break;
        }
        add_check(rep, "kind_at_s", okind, detail);

        bool rank_ok = cfg.marked.kind.rank() == 0
                           ? cfg.marked.xi.is_zero()
                           : cfg.marked.xi.rank() == cfg.marked.kind.rank();
        add_check(rep, "xi_rank", rank_ok,
                  rank_ok ? "invariant rank matches the fiber kind"
                          : "invariant rank does not match the fiber kind");

        if (cfg.marked.kind.tag == WCFiberKind::Tag::Trivial)
            add_check(rep, "trivial_kind_multiplicity", cfg.marked.m == 1,
                      cfg.marked.m == 1 ? "no multiple fiber over a zero local group"
                                        : "a zero local group admits no multiple fiber");
    }

    // declared automorphism order
    {
        bool order_ok = true;
        std::string detail = "aut_order " + std::to_string(cfg.aut_order);
        try {
            cfg.action();
        } catch (const Error& e) {
            order_ok = false;
            detail = e.what();
        }
        add_check(rep, "aut_order", order_ok, detail);
        if (order_ok && cfg.aut_order >= 4) {
            rep.assumptions.push_back(
                "aut_order " + std::to_string(cfg.aut_order) +
                " presumes a constant J-map (j = " +
                std::string(cfg.aut_order == 4 ? "1728" : "0") +
                "); declared, not verified");
            for (const auto& [pt, fiber] : cfg.fibers)
                if (fiber.is_multiplicative()) {
                    rep.warnings.push_back(
                        "fiber " + fiber.symbol() + " at " + pt.str() +
                        " forces a non-constant J-map, contradicting aut_order " +
                        std::to_string(cfg.aut_order));
                    break;
                }
        }
    }

    // two or more singular points besides s keep the stabilizer finite
    {
        std::vector<P1Point> others = cfg.jacobian_discriminant();
        others.erase(std::remove(others.begin(), others.end(), cfg.marked.s), others.end());
        if (others.size() < 2)
            rep.warnings.push_back(
                "fewer than two singular fibers away from s; the base stabilizer may be infinite");
    }

    if (cfg.n1 && *cfg.n1 < 1)
        add_check(rep, "n1_positive", false, "n1 must be a positive integer");

    return rep;
}

void require_valid(const SurfaceConfig& cfg) {
    ValidationReport rep = validate(cfg);
    if (rep.ok) return;
    std::ostringstream os;
    os << "invalid surface configuration:";
    for (const CheckResult& c : rep.checks)
        if (!c.passed) os << " [" << c.name << "] " << c.detail << ";";
    throw InvalidConfig(os.str());
}

std::map<P1Point, TorsionPoint> local_invariants(const SurfaceConfig& cfg) {
    require_valid(cfg);
    std::map<P1Point, TorsionPoint> inv;
    for (const auto& [pt, fiber] : cfg.fibers)
        inv.emplace(pt, TorsionPoint::zero(cfg.marked.xi.rank()));
    inv.insert_or_assign(cfg.marked.s, cfg.marked.xi);
    return inv;
}

FMReport fm_report_for(const SurfaceConfig& cfg) {
    require_valid(cfg);
    long long n1;
    if (cfg.n1) {
        n1 = *cfg.n1;
    } else {
        n1 = n1_upper_bound(cfg).bound;
    }
    return fm_number(cfg.action(), cfg.marked.xi, n1);
}

FMReport fm_report_for(const SurfaceConfig& cfg, long long n1_override) {
    require_valid(cfg);
    return fm_number(cfg.action(), cfg.marked.xi, n1_override);
}

} // namespace fmres
