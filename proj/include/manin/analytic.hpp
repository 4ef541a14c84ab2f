#ifndef MANIN_ANALYTIC_HPP
#define MANIN_ANALYTIC_HPP

#include <utility>
#include <vector>

#include "manin/characters.hpp"
#include "manin/rat.hpp"

namespace manin::analytic {

// --- special functions ------------------------------------------------------

// Hurwitz zeta minus its pole: zeta(s, x) - 1/(s-1), smooth across s = 1.
// Euler-Maclaurin; s > 0, 0 < x <= 1.
double hurwitz_zeta_reg(double s, double x);
double zeta(double s);                    // s > 1
double zeta_times_s_minus_1(double s);    // (s-1) zeta(s), stable near s = 1

// --- L-values ----------------------------------------------------------------

// Truncated Euler product  prod_{p <= P} (1 - chi(p) p^{-s})^{-1};  s > 1.
double l_value(const QuadCharacter& chi, double s, u64 cutoff);

// Dirichlet-series evaluation (periodized Euler-Maclaurin), the cross-check
// route: converges for s > 0 when chi is non-principal (s = 1 included),
// s > 1 for the principal character.
double l_value_series(const QuadCharacter& chi, double s);

// --- partial Euler products (density-1/|R| supports) -------------------------

// prod over primes p <= P, unramified for every member of R and for chi, of
// (1 - ind_R(p) chi(p) p^{-s})^{-1}  where ind_R(p) = 1 iff rho(p) = 1 for
// all rho in R.   s > 1.
double partial_euler_product(const CharacterGroup& R, const QuadCharacter& chi, double s,
                             u64 cutoff);

// Estimates of G = L_R(chi, s)^{|R|} / prod_{rho in R} L(rho chi, s) with all
// factors truncated at the same prime bound, at two cutoffs P1 < P2.
std::pair<double, double> factorization_check(const CharacterGroup& R, const QuadCharacter& chi,
                                              double s, u64 P1, u64 P2);

// --- singular limit -----------------------------------------------------------

// The constant c with L_R(rho, s) ~ c / (s-1)^(1/|R|) as s -> 1+, estimated
// through the factorization identity along the ladder s_k = 1 + 2^-k
// (k = 3..20); the zeta pole is handled analytically, the other factors are
// continuous at 1.
struct SingularLimit {
    double c = 0;
    Rat omega;                                     // 1/|R|
    std::vector<std::pair<double, double>> trace;  // (s_k, estimate), increasing k
    std::vector<std::pair<u64, double>> cutoff_trace;  // ladder-end estimate by
                                                       // increasing prime cutoff
    bool converged = false;                        // relative 1e-3 at ladder end
};
SingularLimit singular_limit(const CharacterGroup& R, const QuadCharacter& rho,
                             u64 cutoff = 1'000'000);

// --- Tauberian constants -------------------------------------------------------

// g1 / Gamma(omega); Gamma exact at half-integers, Lanczos elsewhere.
double delange_constant(double g1, const Rat& omega);
double gamma_at(const Rat& omega);

// Landau--Ramanujan constant K (sums of two squares ~ K x / sqrt(log x)):
// K = 2^{-1/2} prod_{p = 3 mod 4} (1 - p^{-2})^{-1/2}, accelerated by the
// doubling identity through zeta and L(chi_{-4}, .) until the residual
// product is within machine tolerance of 1.
double landau_ramanujan();
double landau_ramanujan_direct(u32 cutoff);  // plain partial product oracle

// Density of {p <= P : rho(p) = 1 for all rho in R} among primes <= P.
double indicator_density(const CharacterGroup& R, u32 P);

}  // namespace manin::analytic

#endif
