#include "manin/brauer.hpp"

#include <stdexcept>

namespace manin::brauer {

PolyRatio PolyRatio::of(mpoly::MPoly p) {
    PolyRatio r;
    r.den = mpoly::MPoly::constant(p.nvars, 1);
    r.num = std::move(p);
    return r;
}

Rat PolyRatio::eval(std::span<const Rat> t) const {
    Rat d = den.eval(t);
    if (d.is_zero())
        throw std::domain_error("Brauer class undefined at point: denominator vanishes");
    return num.eval(t) / d;
}

SymbolClass SymbolClass::make(PolyRatio a, PolyRatio b) {
    if (a.num.is_zero() || b.num.is_zero())
        throw std::invalid_argument("symbol class entries must not be identically zero");
    return SymbolClass{std::move(a), std::move(b)};
}

namespace {

std::pair<Rat, Rat> values_at(const SymbolClass& c, std::span<const Rat> t) {
    Rat av = c.a.eval(t);
    Rat bv = c.b.eval(t);
    if (av.is_zero() || bv.is_zero())
        throw std::domain_error("Brauer class undefined at point: entry vanishes");
    return {av, bv};
}

}  // namespace

LocalInvariant evaluate_local(const SymbolClass& c, std::span<const Rat> t, const arith::Place& v) {
    auto [av, bv] = values_at(c, t);
    return arith::hilbert_symbol(av, bv, v) == 1 ? LocalInvariant::zero : LocalInvariant::half;
}

bool evaluate_global_is_zero(const SymbolClass& c, std::span<const Rat> t) {
    auto [av, bv] = values_at(c, t);
    for (const arith::Place& v : arith::ramified_places(av, bv))
        if (arith::hilbert_symbol(av, bv, v) != 1) return false;
    return true;
}

int indicator(const BrauerSet& B, std::span<const Rat> t) {
    for (const SymbolClass& c : B.elements)
        if (!evaluate_global_is_zero(c, t)) return 0;
    return 1;
}

bool is_norm_quadratic(const Rat& m, i64 d) {
    if (m.is_zero()) throw std::invalid_argument("is_norm_quadratic: zero element");
    return is_norm_quadratic(chk_mul(m.num, m.den), d);  // m ~ num*den modulo squares
}

bool is_norm_quadratic(i128 m, i64 d) {
    if (m == 0) throw std::invalid_argument("is_norm_quadratic: zero element");
    if (d == 0 || d == 1 || arith::squarefree_kernel(d) != d)
        throw std::invalid_argument("is_norm_quadratic: d must be squarefree and != 0, 1");
    // squares are norms: dominant fast path in counting loops
    i128 kern = arith::squarefree_kernel(m);
    if (kern == 1) return true;
    for (const arith::Place& v : arith::ramified_places(i128(d), m))
        if (arith::hilbert_symbol(i128(d), m, v) != 1) return false;
    return true;
}

}  // namespace manin::brauer
