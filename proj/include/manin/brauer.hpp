#ifndef MANIN_BRAUER_HPP
#define MANIN_BRAUER_HPP

#include <span>
#include <vector>

#include "manin/arith.hpp"
#include "manin/mpoly.hpp"
#include "manin/rat.hpp"

namespace manin::brauer {

// Ratio of integer polynomials in t1..tn (denominators tracked explicitly).
struct PolyRatio {
    mpoly::MPoly num;
    mpoly::MPoly den;

    static PolyRatio of(mpoly::MPoly p);  // denominator 1
    Rat eval(std::span<const Rat> t) const;  // throws when the denominator vanishes
};

// Order-2 symbol class (a, b) over the coordinate ring: the quaternion
// algebra of the conic a x^2 + b y^2 = z^2.
struct SymbolClass {
    PolyRatio a, b;

    static SymbolClass make(PolyRatio a, PolyRatio b);  // entries not identically zero
};

struct BrauerSet {
    std::vector<SymbolClass> elements;
};

// Image of the local invariant map, restricted to order <= 2.
enum class LocalInvariant { zero, half };

// inv_v of the specialization at t: zero iff (a(t), b(t))_v = +1.
LocalInvariant evaluate_local(const SymbolClass& c, std::span<const Rat> t, const arith::Place& v);

// True iff the specialization vanishes in Br Q, i.e. the local invariant is
// zero at every place of ramified_places(a(t), b(t)); sufficient by the
// product formula together with unramifiedness elsewhere.
bool evaluate_global_is_zero(const SymbolClass& c, std::span<const Rat> t);

// 1 iff every element of B specializes to zero at t.
int indicator(const BrauerSet& B, std::span<const Rat> t);

// m in N_{Q(sqrt(d))/Q}(Q(sqrt(d))^*)?  Decided by Hilbert symbols at the
// ramified places (Hasse norm theorem, valid for quadratic extensions).
// Requires d squarefree, d not in {0, 1}; m nonzero.
bool is_norm_quadratic(const Rat& m, i64 d);
bool is_norm_quadratic(i128 m, i64 d);

}  // namespace manin::brauer

#endif
