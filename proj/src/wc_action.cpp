#include "fmres/wc_action.hpp"

namespace fmres {

AutAction::AutAction(int order, WCFiberKind kind)
    : group_order(order), fiber_kind(kind) {
    if (order != 1 && order != 2 && order != 4 && order != 6)
        throw Error("automorphism group order must be one of 1, 2, 4, 6");
    if (kind.tag == WCFiberKind::Tag::MultiplicativeIn && order > 2)
        throw KindMismatch("a multiplicative fiber admits group order 1 or 2 only");
}

TorsionPoint apply_generator(const AutAction& act, const TorsionPoint& p) {
    const long long m = p.modulus;
    switch (act.fiber_kind.tag) {
        case WCFiberKind::Tag::Trivial:
            // zero group: only the zero invariant lives here
            if (!p.is_zero())
                throw KindMismatch("trivial fiber kind admits only the zero invariant");
            return p;
        case WCFiberKind::Tag::MultiplicativeIn: {
            if (p.rank() != 1)
                throw KindMismatch("multiplicative fiber kind expects a rank-1 point");
            if (act.group_order == 1) return p;
            return TorsionPoint(m, {-p.coords[0]});
        }
        case WCFiberKind::Tag::SmoothElliptic: {
            if (p.rank() != 2)
                throw KindMismatch("smooth fiber kind expects a rank-2 point");
            const long long a = p.coords[0], b = p.coords[1];
            switch (act.group_order) {
                case 1: return p;
                case 2: return TorsionPoint(m, {-a, -b});
                case 4: return TorsionPoint(m, {-b, a});
                case 6: return TorsionPoint(m, {-b, a + b});
            }
            break;
        }
    }
    throw Error("unreachable action case");
}

std::vector<TorsionPoint> orbit(const AutAction& act, const TorsionPoint& p) {
    std::vector<TorsionPoint> out{p};
    TorsionPoint q = apply_generator(act, p);
    while (q != p) {
        out.push_back(q);
        q = apply_generator(act, q);
    }
    return out;
}

} // namespace fmres
