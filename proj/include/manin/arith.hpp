#ifndef MANIN_ARITH_HPP
#define MANIN_ARITH_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "manin/int128.hpp"
#include "manin/poly.hpp"
#include "manin/rat.hpp"

namespace manin::arith {

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct Factorization {
    int sign = 1;                               // +1 or -1
    std::vector<std::pair<u128, int>> factors;  // (prime, exponent), primes increasing

    i128 value() const;  // sign * prod p^e, exact
};

// Exact deterministic factorization; |n| < 2^127, n != 0.
Factorization factor(i128 n);

// Allocation-free factorization of a u64, for hot counting loops.
struct FactorBuf {
    int n = 0;
    u64 p[16];
    int e[16];
};
void factor_u64(u64 v, FactorBuf& out);

// ---------------------------------------------------------------------------
// Symbols
// ---------------------------------------------------------------------------

// Full-domain Kronecker symbol (a|n), completely multiplicative in both slots.
int kronecker(i128 a, i128 n);

// Places of Q.
struct Place {
    bool infinite = false;
    u128 p = 0;  // verified prime when finite

    static Place infinity() { return Place{true, 0}; }
    static Place finite(u128 prime);  // throws unless prime passes the primality check
    bool operator==(const Place& o) const { return infinite == o.infinite && p == o.p; }
    std::string str() const { return infinite ? "oo" : to_string_u128(p); }
};

// Hilbert symbol (a,b)_v over Q: +1 iff a x^2 + b y^2 = z^2 has a nontrivial
// solution over the completion at v.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);
int hilbert_symbol(i128 a, i128 b, const Place& v);

// {oo, 2} together with every prime of the numerator or denominator of a or b:
// a finite superset of the places where (a,b)_v = -1.
std::vector<Place> ramified_places(const Rat& a, const Rat& b);
std::vector<Place> ramified_places(i128 a, i128 b);

// Squarefree s with n = s * m^2, sign preserved.
i128 squarefree_kernel(i128 n);

// ---------------------------------------------------------------------------
// Norm forms
// ---------------------------------------------------------------------------

// A number field E = Q[x]/(f) presented by a monic irreducible integer
// polynomial f of degree n+1 >= 2; the attached form is
// N_{E/Q}(1 + t_1 w + ... + t_n w^n) in the n affine coordinates t_i.
struct NormFormSpec {
    poly::IPoly min_poly;  // monic, irreducible, degree >= 2
    int arity = 0;         // n = deg f - 1

    static NormFormSpec make(poly::IPoly f);  // validates (irreducibility via the
                                              // degree-capped rational factorizer)
};

// Exact value N(1 + t_1 w + ... + t_n w^n), computed as the resultant
// Res(f, 1 + t_1 x + ... + t_n x^n) (f monic, so this is the product of the
// conjugates).  Zero output is legal and flags a boundary point.
Rat norm_form_value(const NormFormSpec& spec, std::span<const Rat> t);

// Homogeneous integer variant: x_0^(n+1) * N(1, x_1/x_0, ..., x_n/x_0),
// defined for all integer tuples (also x_0 = 0).  Used by counting loops.
i128 norm_form_homogeneous(const NormFormSpec& spec, std::span<const i64> x);

}  // namespace manin::arith

#endif
