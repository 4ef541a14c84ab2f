#include "manin/analytic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "manin/sieve.hpp"

namespace manin::analytic {

// ---------------------------------------------------------------------------
// special functions
// ---------------------------------------------------------------------------

namespace {

// B_2, B_4, ..., B_24
constexpr double kBernoulli[] = {
    1.0 / 6,      -1.0 / 30,     1.0 / 42,      -1.0 / 30,      5.0 / 66,        -691.0 / 2730,
    7.0 / 6,      -3617.0 / 510, 43867.0 / 798, -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730};

}  // namespace

double hurwitz_zeta_reg(double s, double x) {
    if (!(s > 0) || !(x > 0) || x > 1) throw std::invalid_argument("hurwitz_zeta_reg: need s > 0, 0 < x <= 1");
    const int N = 24;
    double sum = 0;
    for (int k = 0; k < N; ++k) sum += std::pow(k + x, -s);
    double y = N + x;
    // (y^{1-s} - 1)/(s-1), continuous through s = 1
    double pole_part;
    if (std::abs(s - 1) < 1e-9) {
        double u = (1 - s) * std::log(y);
        pole_part = -std::log(y) * (1 + u / 2 + u * u / 6);  // expm1(u)/(s-1) expanded
    } else {
        pole_part = std::expm1((1 - s) * std::log(y)) / (s - 1);
    }
    sum += pole_part + 0.5 * std::pow(y, -s);
    // Euler-Maclaurin correction terms
    double rising = s;  // s (s+1) ... (s + 2j - 2)
    double ypow = std::pow(y, -s - 1);
    double fact = 2;  // (2j)!
    for (size_t j = 1; j <= sizeof(kBernoulli) / sizeof(double); ++j) {
        sum += kBernoulli[j - 1] / fact * rising * ypow;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        ypow /= y * y;
        fact = fact * (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

double zeta(double s) {
    if (!(s > 1)) throw std::invalid_argument("zeta: s > 1 required");
    return hurwitz_zeta_reg(s, 1.0) + 1.0 / (s - 1);
}

double zeta_times_s_minus_1(double s) { return (s - 1) * hurwitz_zeta_reg(s, 1.0) + 1.0; }

// ---------------------------------------------------------------------------
// prime list cache
// ---------------------------------------------------------------------------

namespace {

const std::vector<u32>& primes_cached(u32 limit) {
    static std::vector<u32> primes;
    static u32 have = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (limit > have) {
        primes = primes_up_to(limit);
        have = limit;
    }
    return primes;
}

}  // namespace

// ---------------------------------------------------------------------------
// L-values
// ---------------------------------------------------------------------------

double l_value(const QuadCharacter& chi, double s, u64 cutoff) {
    if (!(s > 1)) throw std::invalid_argument("l_value: Euler-product mode needs s > 1");
    if (cutoff < 1) throw std::invalid_argument("l_value: cutoff >= 1 required");
    const auto& primes = primes_cached(u32(cutoff));
    double prod = 1;
    for (u32 p : primes) {
        if (p > cutoff) break;
        int c = chi(i128(p));
        if (c == 0) continue;
        prod /= 1.0 - c * std::pow(double(p), -s);
    }
    return prod;
}

double l_value_series(const QuadCharacter& chi, double s) {
    if (chi.principal()) {
        if (!(s > 1)) throw std::invalid_argument("l_value_series: principal character needs s > 1");
        return zeta(s);
    }
    if (!(s > 0)) throw std::invalid_argument("l_value_series: s > 0 required");
    // L(chi, s) = q^{-s} sum_a chi(a) zeta(s, a/q); the pole parts cancel
    // because sum_a chi(a) = 0, so the regularized Hurwitz values suffice.
    u64 q = chi.conductor();
    double sum = 0;
    for (u64 a = 1; a <= q; ++a) {
        int c = chi(i128(a));
        if (c == 0) continue;
        sum += c * hurwitz_zeta_reg(s, double(a) / double(q));
    }
    return std::pow(double(q), -s) * sum;
}

// ---------------------------------------------------------------------------
// partial Euler products
// ---------------------------------------------------------------------------

namespace {

bool all_unramified(const CharacterGroup& R, const QuadCharacter& chi, u64 p) {
    return R.unramified(u64(p)) && chi.conductor() % p != 0;
}

}  // namespace

double partial_euler_product(const CharacterGroup& R, const QuadCharacter& chi, double s,
                             u64 cutoff) {
    if (!(s > 1)) throw std::invalid_argument("partial_euler_product: s > 1 required");
    const auto& primes = primes_cached(u32(cutoff));
    double prod = 1;
    for (u32 p : primes) {
        if (p > cutoff) break;
        if (!all_unramified(R, chi, p)) continue;
        if (R.indicator(p) != 1) continue;
        prod /= 1.0 - chi(i128(p)) * std::pow(double(p), -s);
    }
    return prod;
}

namespace {

// log of the consistently truncated factorization ratio:
// |R| log L_R(chi, s; P) - sum_rho log L(rho chi, s; P)
double log_g_estimate(const CharacterGroup& R, const QuadCharacter& chi, double s, u64 P) {
    const auto& primes = primes_cached(u32(P));
    double lg = 0;
    size_t n = R.order();
    for (u32 p : primes) {
        if (p > P) break;
        double ps = std::pow(double(p), -s);
        if (all_unramified(R, chi, p) && R.indicator(p) == 1)
            lg -= double(n) * std::log1p(-chi(i128(p)) * ps);
        for (const QuadCharacter& rho : R.members) {
            int c = (rho * chi)(i128(p));
            if (c != 0) lg += std::log1p(-c * ps);
        }
    }
    return lg;
}

}  // namespace

std::pair<double, double> factorization_check(const CharacterGroup& R, const QuadCharacter& chi,
                                              double s, u64 P1, u64 P2) {
    if (P1 >= P2) throw std::invalid_argument("factorization_check: cutoffs must increase");
    return {std::exp(log_g_estimate(R, chi, s, P1)), std::exp(log_g_estimate(R, chi, s, P2))};
}

// ---------------------------------------------------------------------------
// singular limit
// ---------------------------------------------------------------------------

SingularLimit singular_limit(const CharacterGroup& R, const QuadCharacter& rho, u64 cutoff) {
    if (!R.contains(rho)) throw std::invalid_argument("singular_limit: rho must belong to R");
    SingularLimit out;
    size_t n = R.order();
    out.omega = Rat(1, i128(n));
    // L_R(rho, s)^n (s-1) = G(R, rho, s) * [(s-1) zeta(s)] * prod_{chi != 1} L(chi rho, s),
    // every factor on the right continuous and nonzero at s = 1.
    auto estimate_at = [&](double s, u64 P) {
        double lg = log_g_estimate(R, rho, s, P);
        lg += std::log(zeta_times_s_minus_1(s));
        for (const QuadCharacter& member : R.members) {
            QuadCharacter prod = member * rho;
            if (prod.principal()) continue;  // the zeta factor, handled above
            lg += std::log(l_value_series(prod, s));
        }
        return std::exp(lg / double(n));
    };
    for (int k = 3; k <= 20; ++k) {
        double s = 1.0 + std::ldexp(1.0, -k);
        out.trace.push_back({s, estimate_at(s, cutoff)});
    }
    double s_end = out.trace.back().first;
    for (u64 P : {u64(10'000), u64(100'000), u64(1'000'000)}) {
        if (P > cutoff) break;
        out.cutoff_trace.push_back({P, estimate_at(s_end, P)});
    }
    if (out.cutoff_trace.empty() || out.cutoff_trace.back().first != cutoff)
        out.cutoff_trace.push_back({cutoff, out.trace.back().second});
    out.c = out.trace.back().second;
    double prev = out.trace[out.trace.size() - 2].second;
    out.converged = out.c != 0 && std::abs(out.c - prev) <= 1e-3 * std::abs(out.c);
    return out;
}

// ---------------------------------------------------------------------------
// Tauberian constants
// ---------------------------------------------------------------------------

double gamma_at(const Rat& omega) {
    if (!(omega > Rat(0))) throw std::invalid_argument("gamma_at: omega > 0 required");
    if (omega.den == 1) {
        double g = 1;
        for (i128 k = 2; k < omega.num; ++k) g *= double((long double)k);
        return g;  // (n-1)!
    }
    if (omega.den == 2) {
        // Gamma(1/2) = sqrt(pi), then upward recurrence Gamma(x+1) = x Gamma(x)
        double g = std::sqrt(std::numbers::pi);
        for (i128 k = 1; k < omega.num; k += 2) g *= double((long double)k) / 2.0;
        return g;
    }
    // Lanczos (g = 7, n = 9)
    static const double coeff[] = {0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
                                   771.32342877765313,   -176.61502916214059,  12.507343278686905,
                                   -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    double x = omega.to_double();
    double a = coeff[0];
    double t = x + 6.5;
    for (int i = 1; i < 9; ++i) a += coeff[i] / (x + i - 1);
    return std::sqrt(2 * std::numbers::pi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

double delange_constant(double g1, const Rat& omega) { return g1 / gamma_at(omega); }

double landau_ramanujan() {
    // S(s) = prod_{p=3 mod 4} (1 - p^{-2s})^{-1} satisfies
    // S(s)^2 = A(s) S(2s) with A(s) = zeta(2s)(1 - 2^{-2s}) / L(chi_{-4}, 2s),
    // so K = 2^{-1/2} S(1)^{1/2} = 2^{-1/2} prod_{j>=0} A(2^j)^{2^{-(j+2)}}.
    QuadCharacter chi = QuadCharacter::kronecker_char(-4);
    double log_k = -0.5 * std::log(2.0);
    double s = 1;
    for (int j = 0; j < 12; ++j) {
        double a = zeta(2 * s) * (1.0 - std::pow(2.0, -2 * s)) / l_value_series(chi, 2 * s);
        log_k += std::log(a) / std::pow(2.0, j + 2);
        if (std::abs(a - 1.0) < 1e-16) break;
        s *= 2;
    }
    return std::exp(log_k);
}

double landau_ramanujan_direct(u32 cutoff) {
    const auto& primes = primes_cached(cutoff);
    double log_prod = 0;
    for (u32 p : primes) {
        if (p > cutoff) break;
        if (p % 4 == 3) log_prod -= 0.5 * std::log1p(-1.0 / (double(p) * p));
    }
    return std::exp(-0.5 * std::log(2.0) + log_prod);
}

double indicator_density(const CharacterGroup& R, u32 P) {
    const auto& primes = primes_cached(P);
    u64 total = 0, hit = 0;
    for (u32 p : primes) {
        if (p > P) break;
        if (!R.unramified(p)) continue;
        ++total;
        if (R.indicator(p) == 1) ++hit;
    }
    if (total == 0) throw std::invalid_argument("indicator_density: no unramified primes below P");
    return double(hit) / double(total);
}

}  // namespace manin::analytic
