#ifndef MANIN_POLY_HPP
#define MANIN_POLY_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "manin/int128.hpp"
#include "manin/rat.hpp"

namespace manin::poly {

// Univariate integer polynomial, coefficients ascending, trailing zeros trimmed.
struct IPoly {
    std::vector<i128> c;

    IPoly() = default;
    explicit IPoly(std::vector<i128> coeffs) : c(std::move(coeffs)) { trim(); }
    static IPoly from(std::initializer_list<i64> coeffs);

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
    i128 lead() const { return c.back(); }
    i128 coeff(int i) const { return i >= 0 && i < int(c.size()) ? c[i] : 0; }

    Rat eval(const Rat& t) const;
    i128 eval_i(i128 t) const;
    // f(x1/x0) * x0^deg(f): two-variable homogeneous evaluation.
    i128 eval_homogeneous(i64 x0, i64 x1) const;

    IPoly derivative() const;
    i128 content() const;          // gcd of coefficients (>= 0); 0 for zero poly
    IPoly primitive_part() const;  // content removed, leading coefficient > 0

    bool operator==(const IPoly& o) const { return c == o.c; }
    std::string str(const std::string& var = "t") const;
};

IPoly mul(const IPoly& a, const IPoly& b);
IPoly add(const IPoly& a, const IPoly& b);
IPoly neg(const IPoly& a);

// Exact division over Q; returns false unless b * q == a for a polynomial q
// with rational coefficients that clears to the returned integer primitive q.
bool divide_exact(const IPoly& a, const IPoly& b, IPoly& quotient);

// gcd over Q, returned as a primitive integer polynomial (lead > 0);
// gcd(f, f') of degree 0 is the squarefreeness test.
IPoly gcd_q(const IPoly& a, const IPoly& b);
bool is_squarefree(const IPoly& f);

// Resultant Res(a, b) via fraction-free Bareiss elimination of the Sylvester
// matrix.  Exact; throws on 128-bit overflow.
i128 resultant(const IPoly& a, const IPoly& b);

// Factorization into irreducibles over Q (content dropped, factors primitive
// with positive leading coefficient, sorted, with multiplicities).
// Implemented by rational-root extraction plus undetermined-coefficient
// searches for quadratic and cubic factors bounded by Mignotte's bound;
// degree is capped at 6.
std::vector<std::pair<IPoly, int>> factor_q(const IPoly& f);

}  // namespace manin::poly

#endif
