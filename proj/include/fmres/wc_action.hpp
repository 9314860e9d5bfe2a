#pragma once

#include <vector>

#include "fmres/torsion.hpp"

namespace fmres {

// Cyclic group of fiberwise automorphisms acting Z-linearly on the local
// torsion group. The generator is fixed once per order:
//   rank 2:  order 2: (a,b) -> (-a,-b)
//            order 4: (a,b) -> (-b, a)
//            order 6: (a,b) -> (-b, a+b)
//   rank 1:  order 2:  a -> -a
// Over a multiplicative fiber the group has order at most 2.
struct AutAction {
    int group_order = 1;
    WCFiberKind fiber_kind;

    AutAction(int order, WCFiberKind kind);
};

// one application of the generator; KindMismatch if the point's rank does
// not fit the action's fiber kind
TorsionPoint apply_generator(const AutAction& act, const TorsionPoint& p);

// the orbit {g^j p}, duplicates removed, starting at p; its length divides
// the group order
std::vector<TorsionPoint> orbit(const AutAction& act, const TorsionPoint& p);

} // namespace fmres
