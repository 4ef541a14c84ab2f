#include "manin/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "manin/brauer.hpp"
#include "manin/sieve.hpp"

namespace manin::model {

int FamilySpec::base_dim() const {
    if (std::holds_alternative<NormFormFamily>(v))
        return std::get<NormFormFamily>(v).field.arity;
    if (std::holds_alternative<ConicBundle>(v)) return 1;
    return 2;
}

namespace {

// Exact multiquadratic linear-disjointness check: no nonempty subproduct of
// the discriminants (including the field discriminant kernel) is a square.
bool quadratic_twists_disjoint(i128 field_disc_kernel, const std::vector<i64>& discs) {
    std::vector<i128> gens;
    gens.push_back(field_disc_kernel);
    for (i64 d : discs) gens.push_back(d);
    size_t n = gens.size();
    if (n > 20) return true;  // declared; too many to verify exhaustively
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        i128 prod = 1;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) prod = chk_mul(prod, gens[i]);
        if (arith::squarefree_kernel(prod) == 1) return false;
    }
    return true;
}

i128 poly_discriminant_kernel(const poly::IPoly& f) {
    // disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f); f monic here
    poly::IPoly fp = f.derivative();
    i128 res = poly::resultant(f, fp);
    int d = f.degree();
    if (((d * (d - 1)) / 2) % 2 == 1) res = chk_sub(0, res);
    return arith::squarefree_kernel(res);
}

}  // namespace

FamilySpec FamilySpec::norm_form(arith::NormFormSpec field, std::vector<CyclicTwist> twists,
                                 bool linearly_disjoint) {
    int deg = field.arity + 1;
    std::vector<i64> quad_discs;
    bool all_quadratic = true;
    for (const CyclicTwist& tw : twists) {
        if (tw.degree < 1) throw std::invalid_argument("twist degree must be positive");
        if (deg % tw.degree != 0)
            throw std::invalid_argument(
                "twist degree " + std::to_string(tw.degree) + " does not divide deg E = " +
                std::to_string(deg) + " (the class would be ramified at the identity chart)");
        if (tw.degree == 2) {
            if (!tw.disc)
                throw std::invalid_argument("quadratic twist requires a discriminant");
            i64 d = *tw.disc;
            if (d == 0 || d == 1 || arith::squarefree_kernel(d) != d)
                throw std::invalid_argument("twist discriminant must be squarefree and != 0, 1");
            quad_discs.push_back(d);
        } else {
            if (tw.degree > 2) all_quadratic = false;
            if (tw.disc)
                throw std::invalid_argument("disc is only meaningful for quadratic twists");
        }
    }
    if (linearly_disjoint && all_quadratic && deg == 2 && !quad_discs.empty()) {
        std::set<i64> uniq(quad_discs.begin(), quad_discs.end());
        if (uniq.size() != quad_discs.size())
            throw std::invalid_argument("linear disjointness fails: repeated twist discriminant");
        if (!quadratic_twists_disjoint(poly_discriminant_kernel(field.min_poly), quad_discs))
            throw std::invalid_argument(
                "linear disjointness fails: some subproduct of discriminants is a square");
    }
    FamilySpec s;
    s.v = NormFormFamily{std::move(field), std::move(twists), linearly_disjoint};
    return s;
}

FamilySpec FamilySpec::conic_bundle(poly::IPoly f0, poly::IPoly f1, poly::IPoly f2) {
    for (const poly::IPoly* f : {&f0, &f1, &f2})
        if (f->is_zero()) throw std::invalid_argument("conic bundle coefficients must be nonzero");
    int d0 = f0.degree(), d1 = f1.degree(), d2 = f2.degree();
    if (((d0 ^ d1) & 1) || ((d0 ^ d2) & 1))
        throw std::invalid_argument(
            "smooth fibre at infinity requires deg f0 = deg f1 = deg f2 (mod 2)");
    poly::IPoly f = poly::mul(poly::mul(f0, f1), f2);
    if (f.degree() > 6)
        throw std::invalid_argument("deg(f0 f1 f2) > 6 exceeds the factorization cap");
    if (f.degree() > 0 && !poly::is_squarefree(f))
        throw std::invalid_argument("f0 f1 f2 must be squarefree (separable degenerate locus)");
    FamilySpec s;
    s.v = ConicBundle{std::move(f0), std::move(f1), std::move(f2)};
    return s;
}

FamilySpec FamilySpec::diagonal_conics() {
    FamilySpec s;
    s.v = DiagonalConics{};
    return s;
}

// ---------------------------------------------------------------------------
// models
// ---------------------------------------------------------------------------

Rat delta_from_components(std::span<const int> degrees) {
    Rat sum(0);
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("component degree must be positive");
        sum = sum + (Rat(1) - Rat(1, d));
    }
    return sum;
}

std::vector<std::pair<poly::IPoly, int>> factor_poly(const poly::IPoly& f) {
    return poly::factor_q(f);
}

namespace {

Model finish_model(int rho, std::vector<DivisorDatum> divisors, bool conjectural) {
    Model m;
    m.rho = rho;
    m.divisors = std::move(divisors);
    Rat delta(0);
    for (const DivisorDatum& d : m.divisors) {
        if (d.residue_order != d.component_degree)
            throw std::logic_error("divisor datum violates residue-order/component-degree match");
        delta = delta + (Rat(1) - Rat(1, d.residue_order));
    }
    m.delta = delta;
    if (delta < Rat(0) || (m.divisors.empty() ? delta != Rat(0) : !(delta < Rat(i128(m.divisors.size()), 1))))
        throw std::logic_error("delta outside [0, #divisors)");
    m.rho_B = Rat(rho) - delta;
    m.predicted_exponent = m.rho_B - Rat(1);
    m.conjectural = conjectural;
    return m;
}

}  // namespace

Model build_model(const FamilySpec& spec) {
    if (std::holds_alternative<NormFormFamily>(spec.v)) {
        const auto& fam = std::get<NormFormFamily>(spec.v);
        if (!fam.twists.empty() && !fam.linearly_disjoint)
            throw std::invalid_argument(
                "norm-form model requires the declared linear disjointness of E, E_1, ..., E_r");
        long long order = 1;
        for (const CyclicTwist& tw : fam.twists) {
            order *= tw.degree;
            if (order > 1'000'000) throw std::invalid_argument("residue order out of range");
        }
        DivisorDatum d;
        d.label = "{" + fam.field.min_poly.str("w") + " norm = 0}";
        d.residue_order = int(order);
        d.component_degree = int(order);
        return finish_model(1, {d}, false);
    }
    if (std::holds_alternative<ConicBundle>(spec.v)) {
        const auto& cb = std::get<ConicBundle>(spec.v);
        poly::IPoly f = poly::mul(poly::mul(cb.f0, cb.f1), cb.f2);
        std::vector<DivisorDatum> divisors;
        if (f.degree() > 0) {
            for (auto& [g, mult] : poly::factor_q(f)) {
                DivisorDatum d;
                d.label = "{" + g.str() + " = 0}";
                d.residue_order = 2;
                d.component_degree = 2;
                divisors.push_back(std::move(d));
            }
        }
        return finish_model(1, std::move(divisors), false);
    }
    // Diagonal conics: coefficient-space bookkeeping with one divisor per
    // vanishing coefficient; only lower/upper bounds are known here, so the
    // exponent is surfaced as conjectural.
    std::vector<DivisorDatum> divisors = {
        {"{a = 0}", 2, 2}, {"{b = 0}", 2, 2}, {"{c = 0}", 2, 2}};
    return finish_model(3, std::move(divisors), true);
}

// ---------------------------------------------------------------------------
// fibre predicates
// ---------------------------------------------------------------------------

namespace {

bool conic_locally_soluble(const Rat& a, const Rat& b, const Rat& c) {
    // a x^2 + b y^2 + c z^2 = 0 soluble over every completion
    // <=> (-b/a, -c/a)_v = +1 for all v (Hasse-Minkowski reduces global to local)
    Rat u = -(b * a), w = -(c * a);
    for (const arith::Place& v : arith::ramified_places(u, w))
        if (arith::hilbert_symbol(u, w, v) != 1) return false;
    return true;
}

bool conic_locally_soluble_int(i128 a, i128 b, i128 c) {
    i128 u = chk_sub(0, chk_mul(b, a)), w = chk_sub(0, chk_mul(c, a));
    for (const arith::Place& v : arith::ramified_places(u, w))
        if (arith::hilbert_symbol(u, w, v) != 1) return false;
    return true;
}

}  // namespace

bool fiber_has_point(const FamilySpec& spec, std::span<const Rat> t) {
    if (std::holds_alternative<NormFormFamily>(spec.v)) {
        const auto& fam = std::get<NormFormFamily>(spec.v);
        Rat value = arith::norm_form_value(fam.field, t);
        if (value.is_zero())
            throw std::domain_error("boundary point: norm form vanishes (outside the open orbit)");
        for (const CyclicTwist& tw : fam.twists) {
            if (tw.degree == 1) continue;  // split twist, always soluble
            if (tw.degree > 2)
                throw std::invalid_argument(
                    "point evaluation unavailable for cyclic twists of degree > 2 "
                    "(supported symbolically in the exponent computation only)");
            if (!brauer::is_norm_quadratic(value, *tw.disc)) return false;
        }
        return true;
    }
    if (std::holds_alternative<ConicBundle>(spec.v)) {
        const auto& cb = std::get<ConicBundle>(spec.v);
        if (t.size() != 1) throw std::invalid_argument("conic bundle base point is 1 coordinate");
        Rat v0 = cb.f0.eval(t[0]), v1 = cb.f1.eval(t[0]), v2 = cb.f2.eval(t[0]);
        if (v0.is_zero() || v1.is_zero() || v2.is_zero())
            throw std::domain_error("boundary point: degenerate conic fibre (some f_i(t) = 0)");
        return conic_locally_soluble(v0, v1, v2);
    }
    if (t.size() != 3) throw std::invalid_argument("diagonal conic point is (a : b : c)");
    if (t[0].is_zero() || t[1].is_zero() || t[2].is_zero())
        throw std::domain_error("boundary point: vanishing conic coefficient");
    return conic_locally_soluble(t[0], t[1], t[2]);
}

FiberStatus fiber_status(const FamilySpec& spec, std::span<const i64> coords) {
    if (std::holds_alternative<NormFormFamily>(spec.v)) {
        const auto& fam = std::get<NormFormFamily>(spec.v);
        if (coords[0] == 0) return FiberStatus::excluded;  // outside the affine torus chart
        i128 nh = arith::norm_form_homogeneous(fam.field, coords);
        if (nh == 0) return FiberStatus::excluded;
        // value = nh / x0^(n+1); as a square class multiply by x0^(n+1)
        i128 value = (fam.field.arity % 2 == 0) ? chk_mul(nh, i128(coords[0])) : nh;
        for (const CyclicTwist& tw : fam.twists) {
            if (tw.degree == 1) continue;
            if (tw.degree > 2)
                throw std::invalid_argument(
                    "point evaluation unavailable for cyclic twists of degree > 2");
            if (!brauer::is_norm_quadratic(value, *tw.disc)) return FiberStatus::insoluble;
        }
        return FiberStatus::soluble;
    }
    if (std::holds_alternative<ConicBundle>(spec.v)) {
        const auto& cb = std::get<ConicBundle>(spec.v);
        if (coords[0] == 0) return FiberStatus::excluded;  // counting over the affine t-line
        i128 c[3];
        const poly::IPoly* fs[3] = {&cb.f0, &cb.f1, &cb.f2};
        for (int i = 0; i < 3; ++i) {
            i128 hv = fs[i]->eval_homogeneous(coords[0], coords[1]);
            if (hv == 0) return FiberStatus::excluded;
            // f_i(t) * x0^(2 ceil(d_i/2)): same square class as f_i(t)
            c[i] = (fs[i]->degree() % 2 == 1) ? chk_mul(hv, i128(coords[0])) : hv;
        }
        return conic_locally_soluble_int(c[0], c[1], c[2]) ? FiberStatus::soluble
                                                           : FiberStatus::insoluble;
    }
    if (coords[0] == 0 || coords[1] == 0 || coords[2] == 0) return FiberStatus::excluded;
    return conic_locally_soluble_int(coords[0], coords[1], coords[2])
               ? FiberStatus::soluble
               : FiberStatus::insoluble;
}

// ---------------------------------------------------------------------------
// hot-path fibre evaluator
// ---------------------------------------------------------------------------

namespace {

inline int eps2(i64 u) {  // (u-1)/2 mod 2 for odd u
    int r = int(((u % 8) + 8) % 8);
    return (r == 3 || r == 7) ? 1 : 0;
}

inline int omega2(i64 u) {  // (u^2-1)/8 mod 2 for odd u
    int r = int(((u % 8) + 8) % 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

FiberEvaluator::FiberEvaluator(const FamilySpec& spec) : spec_(&spec) {
    if (std::holds_alternative<NormFormFamily>(spec.v)) {
        kind_ = Kind::norm_form;
        const auto& fam = std::get<NormFormFamily>(spec.v);
        arity_ = fam.field.arity;
        odd_degree_ = (arity_ + 1) % 2 == 1;
        if (arity_ == 1) {
            quad_a1_ = fam.field.min_poly.coeff(1);
            quad_a0_ = fam.field.min_poly.coeff(0);
        }
        for (const CyclicTwist& tw : fam.twists) {
            if (tw.degree == 1) continue;
            if (tw.degree > 2) { evaluable_ = false; continue; }
            QuadTwist qt;
            qt.d = *tw.disc;
            qt.negative = qt.d < 0;
            i64 u = qt.d;
            while (u % 2 == 0) { u /= 2; ++qt.v2; }
            qt.odd_unit = u;
            arith::FactorBuf fb;
            arith::factor_u64(u64(qt.d < 0 ? -qt.d : qt.d), fb);
            for (int i = 0; i < fb.n; ++i)
                if (fb.p[i] != 2) qt.odd_primes.push_back(fb.p[i]);
            twists_.push_back(std::move(qt));
        }
    } else if (std::holds_alternative<ConicBundle>(spec.v)) {
        kind_ = Kind::conic_bundle;
    } else {
        kind_ = Kind::diagonal;
    }
}

namespace {

// (d, m)_v = +1 at every ramified place, for squarefree d (precomputed parts)
// and m presented as sign * 2^v2 * odd_unit with odd prime factorization fm.
bool quad_norm_conditions(i64 d, bool d_neg, int d_v2, i64 d_odd_unit,
                          const std::vector<u64>& d_odd_primes, bool m_neg, int m_v2,
                          i64 m_odd_unit, const arith::FactorBuf& fm) {
    // v = infinity
    if (d_neg && m_neg) return false;
    // v = 2: (-1)^(eps(u_d) eps(u_m) + v2(d) omega(u_m) + v2(m) omega(u_d))
    i64 um = m_neg ? -m_odd_unit : m_odd_unit;
    int ex = eps2(d_odd_unit) * eps2(um) + d_v2 * omega2(um) + (m_v2 & 1) * omega2(d_odd_unit);
    if (ex & 1) return false;
    // odd p | d: (d, m)_p = (-1)^(gamma eps(p)) (d/p | p)^gamma (m/p^gamma | p)
    for (u64 p : d_odd_primes) {
        i64 dp = d / i64(p);
        int gamma = 0;
        for (int i = 0; i < fm.n; ++i)
            if (fm.p[i] == p) { gamma = fm.e[i]; break; }
        i128 m_over = i128(um) * (i128(1) << m_v2);  // m with sign and 2-part
        for (int g = 0; g < gamma; ++g) m_over /= i128(p);
        int sym = 1;
        if ((gamma & 1) && (p % 4 == 3)) sym = -sym;
        if (gamma & 1) sym *= arith::kronecker(i128(dp), i128(p));
        sym *= arith::kronecker(m_over, i128(p));
        if (sym != 1) return false;
    }
    // odd p | m to odd order, p not dividing 2d: (d | p) must be +1
    for (int i = 0; i < fm.n; ++i) {
        u64 p = fm.p[i];
        if (p == 2 || (fm.e[i] & 1) == 0) continue;
        if (u64(d < 0 ? -d : d) % p == 0) continue;  // handled above
        if (arith::kronecker(i128(d), i128(p)) != 1) return false;
    }
    return true;
}

}  // namespace

FiberStatus FiberEvaluator::operator()(std::span<const i64> coords) const {
    if (kind_ == Kind::diagonal) return fiber_status(*spec_, coords);
    if (kind_ == Kind::conic_bundle) return fiber_status(*spec_, coords);
    // norm-form family
    if (coords[0] == 0) return FiberStatus::excluded;
    i128 nh;
    if (arity_ == 1) {
        i128 x0 = coords[0], x1 = coords[1];
        nh = x0 * x0 - quad_a1_ * x0 * x1 + quad_a0_ * x1 * x1;
    } else {
        nh = arith::norm_form_homogeneous(std::get<NormFormFamily>(spec_->v).field, coords);
    }
    if (nh == 0) return FiberStatus::excluded;
    if (!evaluable_)
        throw std::invalid_argument("point evaluation unavailable for cyclic twists of degree > 2");
    // value = nh / x0^(n+1); adjust the square class by x0 when n+1 is odd
    i128 value = odd_degree_ ? chk_mul(nh, i128(coords[0])) : nh;
    // value fits i64 at desk scale; fall back to the generic route otherwise
    if (value > i128(1) << 62 || value < -(i128(1) << 62)) {
        for (const QuadTwist& qt : twists_)
            if (!brauer::is_norm_quadratic(value, qt.d)) return FiberStatus::insoluble;
        return FiberStatus::soluble;
    }
    i64 m = i64(value);
    bool m_neg = m < 0;
    u64 am = u64(m_neg ? -m : m);
    int m_v2 = 0;
    while ((am & 1) == 0) { am >>= 1; ++m_v2; }
    arith::FactorBuf fm;
    arith::factor_u64(am, fm);
    // squares are norms for every twist
    bool is_square = !m_neg && m_v2 % 2 == 0;
    if (is_square)
        for (int i = 0; i < fm.n && is_square; ++i)
            if (fm.e[i] & 1) is_square = false;
    if (is_square) return FiberStatus::soluble;
    for (const QuadTwist& qt : twists_) {
        if (!quad_norm_conditions(qt.d, qt.negative, qt.v2, qt.odd_unit, qt.odd_primes, m_neg,
                                  m_v2, i64(am), fm))
            return FiberStatus::insoluble;
    }
    return FiberStatus::soluble;
}

// ---------------------------------------------------------------------------
// conic fibre classification
// ---------------------------------------------------------------------------

namespace {

bool rat_is_square(const Rat& r) {
    if (r.sign() < 0) return false;
    if (r.is_zero()) return true;
    u128 rn, rd;
    return is_perfect_square_u128(u128(r.num), rn) && is_perfect_square_u128(u128(r.den), rd);
}

// residue of u modulo g as rational polynomial coefficients (deg < deg g)
std::vector<Rat> poly_mod(const poly::IPoly& u, const poly::IPoly& g) {
    std::vector<Rat> r(u.c.size());
    for (size_t i = 0; i < u.c.size(); ++i) r[i] = Rat(u.c[i], 1);
    int dg = g.degree();
    Rat lead(g.lead(), 1);
    for (int i = int(r.size()) - 1; i >= dg; --i) {
        if (r[i].is_zero()) continue;
        Rat q = r[i] / lead;
        for (int j = 0; j <= dg; ++j) r[i - dg + j] = r[i - dg + j] - q * Rat(g.coeff(j), 1);
    }
    r.resize(dg);
    return r;
}

// Is u = s0 + s1*alpha a square in Q[alpha], g(alpha) = g2 alpha^2 + g1 alpha + g0 = 0?
bool quadratic_field_is_square(const Rat& s0, const Rat& s1, const poly::IPoly& g) {
    // alpha = (-g1 + sqrt(D)) / (2 g2), D = g1^2 - 4 g0 g2 (non-square as g irreducible)
    Rat g2(g.coeff(2), 1), g1(g.coeff(1), 1), g0(g.coeff(0), 1);
    Rat D = g1 * g1 - Rat(4) * g0 * g2;
    // u = a + b sqrt(D) with a = s0 - s1 g1 / (2 g2), b = s1 / (2 g2)
    Rat a = s0 - s1 * g1 / (Rat(2) * g2);
    Rat b = s1 / (Rat(2) * g2);
    if (b.is_zero()) return rat_is_square(a) || rat_is_square(a / D);
    // u = (x + y sqrt(D))^2 needs N = a^2 - D b^2 = q^2 and (a +- q)/2 a square
    Rat N = a * a - D * b * b;
    if (N.sign() < 0) return false;
    u128 qn, qd;
    if (!is_perfect_square_u128(abs128(N.num), qn) || !is_perfect_square_u128(u128(N.den), qd))
        return false;
    Rat q{i128(qn), i128(qd)};
    return rat_is_square((a + q) / Rat(2)) || rat_is_square((a - q) / Rat(2));
}

}  // namespace

FiberClass classify_conic_fiber(const ConicBundle& cb, const poly::IPoly& g, int index,
                                int probes) {
    if (index < 0 || index > 2) throw std::invalid_argument("index must be 0, 1 or 2");
    const poly::IPoly* fs[3] = {&cb.f0, &cb.f1, &cb.f2};
    poly::IPoly quo;
    if (g.degree() < 1 || !poly::divide_exact(*fs[index], g, quo))
        throw std::invalid_argument("g must be a nonconstant factor of f_" + std::to_string(index));
    int j = (index + 1) % 3, k = (index + 2) % 3;
    // residue condition: -f_j(alpha) f_k(alpha) a square in Q[alpha]/(g)?
    poly::IPoly prod = poly::neg(poly::mul(*fs[j], *fs[k]));
    std::vector<Rat> u = poly_mod(prod, g);

    if (g.degree() == 1) {
        Rat val = u.empty() ? Rat(0) : u[0];  // reduced mod (g1 t + g0): a rational
        return {!rat_is_square(val), true};
    }
    if (g.degree() == 2) {
        Rat s0 = u.size() > 0 ? u[0] : Rat(0);
        Rat s1 = u.size() > 1 ? u[1] : Rat(0);
        return {!quadratic_field_is_square(s0, s1, g), true};
    }
    // degree >= 3: residue test at primes where g has a root; a single
    // non-residue value proves non-split, all-residue outcomes are reported
    // with exact = false
    int done = 0;
    for (u64 p = 101; done < probes && p < 2'000'000; p += 2) {
        if (!is_prime_u64(p)) continue;
        i128 lead = g.lead() % i128(p);
        if (lead == 0) continue;
        bool used = false;
        for (u64 r = 0; r < p; ++r) {
            // g(r) mod p
            u64 gr = 0;
            for (int i = g.degree(); i >= 0; --i) {
                i128 c = g.coeff(i) % i128(p);
                u64 cu = u64((c + p) % i128(p));
                gr = (mulmod_u64(gr, r, p) + cu) % p;
            }
            if (gr != 0) continue;
            // u(r) mod p (rational coefficients)
            u64 val = 0;
            bool bad = false;
            for (int i = int(u.size()) - 1; i >= 0; --i) {
                i128 den = u[i].den % i128(p);
                if (den == 0) { bad = true; break; }
                u64 denu = u64(den);
                i128 num = u[i].num % i128(p);
                u64 numu = u64((num + p) % i128(p));
                u64 ci = mulmod_u64(numu, powmod_u64(denu, p - 2, p), p);
                val = (mulmod_u64(val, r, p) + ci) % p;
            }
            if (bad || val == 0) continue;
            used = true;
            if (powmod_u64(val, (p - 1) / 2, p) != 1) return {true, true};
        }
        if (used) ++done;
    }
    return {false, false};
}

}  // namespace manin::model
