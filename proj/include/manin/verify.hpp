#ifndef MANIN_VERIFY_HPP
#define MANIN_VERIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "manin/arith.hpp"

namespace manin::verify {

// Exhaustive local-solubility oracle for a x^2 + b y^2 = z^2 over Q_v,
// independent of the Hilbert-symbol formulas: square parts of the
// coefficients are removed by the substitution x -> p x, matched p-valuations
// are moved across the equation by z -> p z, and the reduced form is searched
// exhaustively for primitive solutions modulo p (units), p^2 (one odd
// valuation) or 8 (p = 2); these moduli lift by the smoothness of the found
// solutions.
bool conic_soluble_oracle(i64 a, i64 b, const arith::Place& v);

// Bounded rational-point search for a x^2 + b y^2 + c z^2 = 0 after the
// classical reduction to a squarefree pairwise-coprime form; by Holzer's
// theorem the reduced form, when soluble, has a solution with |x| <=
// sqrt|bc|, |y| <= sqrt|ac|, |z| <= sqrt|ab|, so the search is a terminating
// oracle.  Returns a witness for the reduced form.
std::optional<std::array<i64, 3>> holzer_search(i64 a, i64 b, i64 c);

// Self-verification suites (oracle-vs-implementation cross checks).
struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;  // includes the first counterexample on failure
};

SuiteResult suite_hilbert_oracle(int coeff_bound, bool corrupt_symbols);
SuiteResult suite_product_formula(u64 seed, int pairs);
SuiteResult suite_norm_brute_force(u64 seed);
SuiteResult suite_enumeration(i64 T_p1, i64 T_p2);
SuiteResult suite_holzer(u64 seed, int conics);
SuiteResult suite_synthetic_fits();

std::vector<SuiteResult> run_all(u64 seed, bool corrupt_symbols);

}  // namespace manin::verify

#endif
