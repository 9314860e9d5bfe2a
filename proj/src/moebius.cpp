#include "fmres/moebius.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace fmres {

MoebiusMap::MoebiusMap(Rat a_, Rat b_, Rat c_, Rat d_) : a(a_), b(b_), c(c_), d(d_) {
    if ((a * d - b * c).is_zero())
        throw Degenerate("moebius map with vanishing determinant");
    normalize();
}

void MoebiusMap::normalize() {
    for (Rat* r : {&a, &b, &c, &d}) {
        if (!r->is_zero()) {
            Rat scale = *r;
            a = a / scale;
            b = b / scale;
            c = c / scale;
            d = d / scale;
            return;
        }
    }
}

P1Point MoebiusMap::apply(const P1Point& z) const {
    if (z.infinite)
        return c.is_zero() ? P1Point::inf() : P1Point(a / c);
    Rat denom = c * z.value + d;
    if (denom.is_zero()) return P1Point::inf();
    return P1Point((a * z.value + b) / denom);
}

MoebiusMap MoebiusMap::inverse() const { return {d, -b, -c, a}; }

bool MoebiusMap::is_identity() const { return *this == MoebiusMap(); }

MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) {
    return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
            f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

bool operator<(const MoebiusMap& f, const MoebiusMap& g) {
    if (f.a != g.a) return f.a < g.a;
    if (f.b != g.b) return f.b < g.b;
    if (f.c != g.c) return f.c < g.c;
    return f.d < g.d;
}

std::string MoebiusMap::str() const {
    std::ostringstream os;
    os << "(" << a.str() << "," << b.str() << "," << c.str() << "," << d.str() << ")";
    return os.str();
}

namespace {

// matrix of the map sending (z1, z2, z3) to (0, 1, inf)
std::array<Rat, 4> to_standard_triple(const std::array<P1Point, 3>& z) {
    const P1Point &z1 = z[0], &z2 = z[1], &z3 = z[2];
    if (z1.infinite) return {Rat(0), z2.value - z3.value, Rat(1), -z3.value};
    if (z2.infinite) return {Rat(1), -z1.value, Rat(1), -z3.value};
    if (z3.infinite) return {Rat(1), -z1.value, Rat(0), z2.value - z1.value};
    return {z2.value - z3.value, -(z1.value * (z2.value - z3.value)),
            z2.value - z1.value, -(z3.value * (z2.value - z1.value))};
}

bool distinct_triple(const std::array<P1Point, 3>& z) {
    return z[0] != z[1] && z[0] != z[2] && z[1] != z[2];
}

} // namespace

MoebiusMap map_through_triple(const std::array<P1Point, 3>& src,
                              const std::array<P1Point, 3>& dst) {
    if (!distinct_triple(src) || !distinct_triple(dst))
        throw Degenerate("triples must consist of three distinct points");
    std::array<Rat, 4> s = to_standard_triple(src);
    std::array<Rat, 4> t = to_standard_triple(dst);
    // inverse of t composed with s, as unnormalized 2x2 products
    std::array<Rat, 4> ti = {t[3], -t[1], -t[2], t[0]};
    return {ti[0] * s[0] + ti[1] * s[2], ti[0] * s[1] + ti[1] * s[3],
            ti[2] * s[0] + ti[3] * s[2], ti[2] * s[1] + ti[3] * s[3]};
}

namespace {

// does f fix s, and permute the labeled points preserving labels?
bool preserves_configuration(const MoebiusMap& f, const P1Point& s,
                             const std::vector<LabeledPoint>& pts,
                             const std::map<P1Point, std::string>& label_of) {
    if (f.apply(s) != s) return false;
    for (const auto& [pt, label] : pts) {
        auto it = label_of.find(f.apply(pt));
        if (it == label_of.end() || it->second != label) return false;
    }
    return true;
}

} // namespace

std::vector<MoebiusMap> stabilizer(const P1Point& s,
                                   const std::vector<LabeledPoint>& labeled_points) {
    const std::size_t n = labeled_points.size();
    if (n < 2)
        throw PossiblyInfinite(
            "stabilizer of fewer than two points need not be finite");

    std::map<P1Point, std::string> label_of;
    for (const auto& [pt, label] : labeled_points) {
        if (pt == s) throw InvalidConfig("the fixed point must not appear among the labeled points");
        if (!label_of.emplace(pt, label).second)
            throw InvalidConfig("duplicate labeled point " + pt.str());
    }

    std::vector<MoebiusMap> group;
    auto admit = [&](const MoebiusMap& f) {
        if (preserves_configuration(f, s, labeled_points, label_of))
            group.push_back(f);
    };

    if (n == 2) {
        // anchor the candidate triples with s itself; with two points the
        // only label-compatible images are identity and the swap
        const auto& [p1, l1] = labeled_points[0];
        const auto& [p2, l2] = labeled_points[1];
        admit(MoebiusMap::identity());
        if (l1 == l2)
            admit(map_through_triple({p1, p2, s}, {p2, p1, s}));
    } else {
        // a candidate is determined by the images of one base triple; every
        // stabilizer element shows up among the label-compatible choices
        std::array<P1Point, 3> base = {labeled_points[0].first, labeled_points[1].first,
                                       labeled_points[2].first};
        std::array<std::string, 3> base_labels = {labeled_points[0].second,
                                                  labeled_points[1].second,
                                                  labeled_points[2].second};
        for (const auto& [q1, m1] : labeled_points) {
            if (m1 != base_labels[0]) continue;
            for (const auto& [q2, m2] : labeled_points) {
                if (q2 == q1 || m2 != base_labels[1]) continue;
                for (const auto& [q3, m3] : labeled_points) {
                    if (q3 == q1 || q3 == q2 || m3 != base_labels[2]) continue;
                    admit(map_through_triple(base, {q1, q2, q3}));
                }
            }
        }
    }

    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    return group;
}

N1Bound n1_upper_bound(const SurfaceConfig& cfg) {
    std::vector<LabeledPoint> labeled;
    for (const auto& [pt, fiber] : cfg.fibers)
        if (fiber.is_singular() && pt != cfg.marked.s)
            labeled.emplace_back(pt, fiber.symbol());

    N1Bound out;
    out.bound = static_cast<long long>(stabilizer(cfg.marked.s, labeled).size());

    // points forced to be fixed individually: s, plus every point whose
    // label occurs exactly once
    std::map<std::string, int> label_count;
    for (const auto& [pt, label] : labeled) ++label_count[label];
    std::size_t pinned = 1;
    for (const auto& [pt, label] : labeled)
        if (label_count[label] == 1) ++pinned;

    if (pinned >= 3) {
        out.certified_exact = true;
        out.note = "three points individually fixed; any induced base automorphism is the identity";
    } else {
        out.note = "stabilizer computed over exact rationals; upper bound for the induced image";
    }
    return out;
}

} // namespace fmres
