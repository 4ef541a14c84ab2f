#ifndef MANIN_MODEL_HPP
#define MANIN_MODEL_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "manin/arith.hpp"
#include "manin/poly.hpp"
#include "manin/rat.hpp"

namespace manin::model {

// ---------------------------------------------------------------------------
// Family specifications
// ---------------------------------------------------------------------------

struct CyclicTwist {
    int degree = 2;
    std::optional<i64> disc;  // required (and used for evaluation) only when degree == 2
};

// Fibre product of the norm-form equations
//   N_{E_i/Q}(x_1..x_{n_i}) = N_{E/Q}(1, t_1, ..., t_n)
// over the torus with boundary {N_E = 0} in P^n.
struct NormFormFamily {
    arith::NormFormSpec field;       // E, degree n+1
    std::vector<CyclicTwist> twists; // one per E_i
    bool linearly_disjoint = false;  // declared by the user
};

// f0(t) x0^2 + f1(t) x1^2 + f2(t) x2^2 = 0 over the t-line.
struct ConicBundle {
    poly::IPoly f0, f1, f2;
};

// a x^2 + b y^2 + c z^2 = 0 over the coefficient space (a : b : c).
struct DiagonalConics {};

struct FamilySpec {
    std::variant<NormFormFamily, ConicBundle, DiagonalConics> v;

    int base_dim() const;

    static FamilySpec norm_form(arith::NormFormSpec field, std::vector<CyclicTwist> twists,
                                bool linearly_disjoint);  // validates
    static FamilySpec conic_bundle(poly::IPoly f0, poly::IPoly f1, poly::IPoly f2);  // validates
    static FamilySpec diagonal_conics();
};

// JSON wire format (stable):
//   {"variant":"norm_form","min_poly":[c0,...,1],"twists":[{"degree":2,"disc":3}],
//    "linearly_disjoint":true}
//   {"variant":"conic_bundle","f0":[...],"f1":[...],"f2":[...]}   (ascending coefficients)
//   {"variant":"diagonal_conics"}
FamilySpec family_from_json(const std::string& text);
std::string family_to_json(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Divisor bookkeeping and the predicted exponent
// ---------------------------------------------------------------------------

struct DivisorDatum {
    std::string label;
    int residue_order = 1;     // |res_D| of the set of classes at D
    int component_degree = 1;  // minimal algebraic-closure degree of a
                               // multiplicity-one component over D (equal to
                               // residue_order for these families)
};

struct Model {
    int rho = 1;  // rank Pic of the compactified base
    std::vector<DivisorDatum> divisors;
    Rat delta;               // sum over divisors of (1 - 1/residue_order)
    Rat rho_B;               // rho - delta
    Rat predicted_exponent;  // rho_B - 1: N(B) ~ c B (log B)^exponent
    bool conjectural = false;
};

Model build_model(const FamilySpec& spec);

Rat delta_from_components(std::span<const int> degrees);  // sum (1 - 1/d_i)

// Rational factorization with the degree cap documented for this artifact.
std::vector<std::pair<poly::IPoly, int>> factor_poly(const poly::IPoly& f);

// ---------------------------------------------------------------------------
// Fibre predicates
// ---------------------------------------------------------------------------

// Does the fibre over t contain a rational point?  t is given in affine
// coordinates of the base (1 value for P^1 bundles, n values for norm-form
// families, 3 projective values for diagonal conics).  Throws a boundary
// error when a defining value vanishes.
bool fiber_has_point(const FamilySpec& spec, std::span<const Rat> t);

// Integer projective variant used by the counting engine.
enum class FiberStatus { soluble, insoluble, excluded };
FiberStatus fiber_status(const FamilySpec& spec, std::span<const i64> coords);

// Allocation-free fibre test with per-family precomputation (twist
// discriminant factorizations, coefficient tables).  Same answers as
// fiber_status; this is the counting-loop hot path, where the norm value is
// factored once with the shared sieve and the symbol conditions are read off
// the factor buffer.
class FiberEvaluator {
  public:
    explicit FiberEvaluator(const FamilySpec& spec);
    FiberStatus operator()(std::span<const i64> coords) const;

  private:
    struct QuadTwist {
        i64 d = 0;
        bool negative = false;
        int v2 = 0;          // 2-valuation of d (0 or 1 after the 4|d rule; d squarefree so <= 1)
        i64 odd_unit = 0;    // d / 2^v2
        std::vector<u64> odd_primes;
    };
    enum class Kind { norm_form, conic_bundle, diagonal } kind_;
    const FamilySpec* spec_;
    // norm-form data
    int arity_ = 0;
    bool odd_degree_ = false;  // n+1 odd: square class needs the extra x0
    i128 quad_a1_ = 0, quad_a0_ = 0;  // degree-2 fast path
    std::vector<QuadTwist> twists_;
    bool evaluable_ = true;
};

// Split/non-split classification of the conic fibre over an irreducible
// factor g | f_index.  Exact for deg g <= 2; decided by a modular
// quadratic-residue test at `probes` split primes for deg g >= 3 (a
// non-residue witness is a proof of non-split; all-residue outcomes carry a
// confidence caveat, reported via `exact`).
struct FiberClass {
    bool nonsplit = false;
    bool exact = true;
};
FiberClass classify_conic_fiber(const ConicBundle& cb, const poly::IPoly& g, int index,
                                int probes = 40);

}  // namespace manin::model

#endif
