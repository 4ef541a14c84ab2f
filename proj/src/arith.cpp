#include "manin/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "manin/sieve.hpp"

namespace manin::arith {

// ---------------------------------------------------------------------------
// factor
// ---------------------------------------------------------------------------

i128 Factorization::value() const {
    i128 v = sign;
    for (auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) v = chk_mul(v, i128(p));
    return v;
}

namespace {

void factor_rec_u128(u128 n, std::vector<std::pair<u128, int>>& out) {
    if (n == 1) return;
    if (is_prime_u128(n)) {
        out.push_back({n, 1});
        return;
    }
    u128 d = pollard_rho_u128(n);
    factor_rec_u128(d, out);
    factor_rec_u128(n / d, out);
}

void merge_sorted(std::vector<std::pair<u128, int>>& fs) {
    std::sort(fs.begin(), fs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<u128, int>> merged;
    for (auto& [p, e] : fs) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.push_back({p, e});
    }
    fs = std::move(merged);
}

}  // namespace

Factorization factor(i128 n) {
    if (n == 0) throw std::invalid_argument("factor: zero input");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    u128 m = abs128(n);
    // shared sieve first, then Miller-Rabin / Pollard rho on the cofactor
    const SmallSieve& sv = small_sieve();
    if (m <= sv.limit) {
        std::uint32_t v = std::uint32_t(m);
        while (v > 1) {
            std::uint32_t p = sv.spf[v];
            int e = 0;
            while (v % p == 0) { v /= p; ++e; }
            f.factors.push_back({p, e});
        }
        return f;
    }
    // strip small sieve primes, then Miller-Rabin + Pollard rho on the cofactor
    for (std::uint32_t p : sv.primes) {
        if (p > 1000 || u128(p) * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.factors.push_back({p, e});
        }
    }
    if (m > 1) {
        if (m <= sv.limit) {
            std::uint32_t v = std::uint32_t(m);
            while (v > 1) {
                std::uint32_t q = sv.spf[v];
                int e = 0;
                while (v % q == 0) { v /= q; ++e; }
                f.factors.push_back({q, e});
            }
        } else {
            std::vector<std::pair<u128, int>> rest;
            factor_rec_u128(m, rest);
            for (auto& r : rest) f.factors.push_back(r);
        }
    }
    merge_sorted(f.factors);
    return f;
}

namespace {

void factor_push(FactorBuf& out, u64 p, int e) {
    out.p[out.n] = p;
    out.e[out.n] = e;
    ++out.n;
}

void factor_rec_u64(u64 n, FactorBuf& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        factor_push(out, n, 1);
        return;
    }
    u64 d = pollard_rho_u64(n);
    factor_rec_u64(d, out);
    factor_rec_u64(n / d, out);
}

}  // namespace

void factor_u64(u64 v, FactorBuf& out) {
    out.n = 0;
    if (v <= 1) return;
    if ((v & 1) == 0) {
        int e = 0;
        while ((v & 1) == 0) { v >>= 1; ++e; }
        factor_push(out, 2, e);
    }
    const SmallSieve& sv = small_sieve();
    if (v <= sv.limit) {
        std::uint32_t x = std::uint32_t(v);
        while (x > 1) {
            std::uint32_t p = sv.spf[x];
            int e = 0;
            while (x % p == 0) { x /= p; ++e; }
            factor_push(out, p, e);
        }
        return;
    }
    // strip small primes, then rho; cutoff tuned for ~1e8-size counting values
    for (std::uint32_t pi = 1; pi < sv.primes.size(); ++pi) {
        u64 p = sv.primes[pi];
        if (p > 997) break;
        if (p * p > v) break;
        if (v % p == 0) {
            int e = 0;
            while (v % p == 0) { v /= p; ++e; }
            factor_push(out, p, e);
        }
    }
    if (v == 1) return;
    if (v <= sv.limit) {
        std::uint32_t x = std::uint32_t(v);
        while (x > 1) {
            std::uint32_t p = sv.spf[x];
            int e = 0;
            while (x % p == 0) { x /= p; ++e; }
            factor_push(out, p, e);
        }
        return;
    }
    if (u128(997) * 997 * 997 >= u128(v)) {
        // cofactor has at most two prime factors
        u64 r = isqrt_u64(v);
        if (r * r == v) {
            factor_push(out, r, 2);  // r is prime: v had no factor <= 997
            return;
        }
        if (is_prime_u64(v)) {
            factor_push(out, v, 1);
            return;
        }
        u64 d = pollard_rho_u64(v);
        u64 q = v / d;
        if (d == q) {
            factor_push(out, d, 2);
        } else {
            factor_push(out, std::min(d, q), 1);
            factor_push(out, std::max(d, q), 1);
        }
        // keep primes sorted for determinism
        for (int i = out.n - 1; i > 0; --i)
            if (out.p[i] < out.p[i - 1]) std::swap(out.p[i], out.p[i - 1]), std::swap(out.e[i], out.e[i - 1]);
        return;
    }
    FactorBuf rest;
    rest.n = 0;
    factor_rec_u64(v, rest);
    std::sort(rest.p, rest.p + rest.n);
    for (int i = 0; i < rest.n; ++i) {
        int j = i;
        int e = 0;
        while (j < rest.n && rest.p[j] == rest.p[i]) { ++e, ++j; }
        factor_push(out, rest.p[i], e);
        i = j - 1;
    }
}

// ---------------------------------------------------------------------------
// kronecker
// ---------------------------------------------------------------------------

int kronecker(i128 a, i128 n) {
    if (n == 0) return abs128(a) == 1 ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;  // (a|-1)
    }
    if (n == 1) return result;
    // factors of 2 in n
    if ((n & 1) == 0) {
        if ((a & 1) == 0) return 0;
        int e = 0;
        while ((n & 1) == 0) { n >>= 1; ++e; }
        if (e & 1) {
            int amod8 = int(((a % 8) + 8) % 8);
            if (amod8 == 3 || amod8 == 5) result = -result;  // (a|2) = (-1)^((a^2-1)/8)
        }
    }
    if (n == 1) return result;
    // Jacobi symbol (a|n) for odd n > 1
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i128 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if ((a % 4) == 3 && (n % 4) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// ---------------------------------------------------------------------------
// places & Hilbert symbol
// ---------------------------------------------------------------------------

Place Place::finite(u128 prime) {
    if (!is_prime_u128(prime)) throw std::invalid_argument("Place: not a prime");
    return Place{false, prime};
}

namespace {

// (u|p) for odd prime p and u coprime to p
int legendre_u128(u128 u, u128 p) {
    u %= p;
    return powmod_u128(u, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int eps_mod2(i128 u) {  // (u-1)/2 mod 2 for odd u
    int r = int(((u % 8) + 8) % 8);
    return (r == 3 || r == 7) ? 1 : 0;  // u = 3,7 mod 8 <=> (u-1)/2 odd
}

int omega_mod2(i128 u) {  // (u^2-1)/8 mod 2 for odd u
    int r = int(((u % 8) + 8) % 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(i128 a, i128 b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero entry");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    if (v.p == 2) {
        int alpha = 0, beta = 0;
        while ((a & 1) == 0) { a /= 2; ++alpha; }
        while ((b & 1) == 0) { b /= 2; ++beta; }
        int ex = eps_mod2(a) * eps_mod2(b) + alpha * omega_mod2(b) + beta * omega_mod2(a);
        return (ex & 1) ? -1 : 1;
    }
    u128 p = v.p;
    int alpha = 0, beta = 0;
    u128 ua, ub;
    {
        u128 m = abs128(a);
        while (m % p == 0) { m /= p; ++alpha; }
        ua = m;
        m = abs128(b);
        while (m % p == 0) { m /= p; ++beta; }
        ub = m;
    }
    int sa = a < 0 ? -1 : 1, sb = b < 0 ? -1 : 1;
    int lu = legendre_u128(ua, p);
    if (sa < 0) lu *= legendre_u128(p - 1, p);
    int lw = legendre_u128(ub, p);
    if (sb < 0) lw *= legendre_u128(p - 1, p);
    int ex = 0;
    if ((alpha & 1) && (beta & 1) && (p % 4 == 3)) ex ^= 1;  // (-1)^(alpha beta eps(p))
    int r = (ex ? -1 : 1);
    if (beta & 1) r *= lu;
    if (alpha & 1) r *= lw;
    return r;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("hilbert_symbol: zero entry");
    // a = n/d is n*d modulo squares
    return hilbert_symbol(chk_mul(a.num, a.den), chk_mul(b.num, b.den), v);
}

std::vector<Place> ramified_places(i128 a, i128 b) {
    if (a == 0 || b == 0) throw std::invalid_argument("ramified_places: zero entry");
    std::vector<Place> out;
    out.push_back(Place::infinity());
    std::vector<u128> primes{2};
    for (i128 x : {a, b}) {
        Factorization f = factor(x);
        for (auto& [p, e] : f.factors)
            if (p != 2) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (u128 p : primes) out.push_back(Place{false, p});
    return out;
}

std::vector<Place> ramified_places(const Rat& a, const Rat& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("ramified_places: zero entry");
    return ramified_places(chk_mul(a.num, a.den), chk_mul(b.num, b.den));
}

i128 squarefree_kernel(i128 n) {
    if (n == 0) throw std::invalid_argument("squarefree_kernel: zero input");
    Factorization f = factor(n);
    i128 s = f.sign;
    for (auto& [p, e] : f.factors)
        if (e & 1) s = chk_mul(s, i128(p));
    return s;
}

// ---------------------------------------------------------------------------
// norm forms
// ---------------------------------------------------------------------------

NormFormSpec NormFormSpec::make(poly::IPoly f) {
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("norm form: min_poly must have degree >= 2");
    if (f.lead() != 1) throw std::invalid_argument("norm form: min_poly must be monic");
    auto fs = poly::factor_q(f);
    if (!(fs.size() == 1 && fs[0].second == 1 && fs[0].first.degree() == d))
        throw std::invalid_argument("norm form: min_poly must be irreducible over Q");
    return NormFormSpec{std::move(f), d - 1};
}

Rat norm_form_value(const NormFormSpec& spec, std::span<const Rat> t) {
    if (int(t.size()) != spec.arity)
        throw std::invalid_argument("norm_form_value: arity mismatch");
    // clear denominators: g = L + T1 x + ... + Tn x^n with L = lcm of dens;
    // N = Res(f, g) / L^(n+1)
    i128 L = 1;
    for (const Rat& r : t) {
        u128 g = gcd_u128(u128(L), u128(r.den));
        L = chk_mul(L, r.den / i128(g));
    }
    std::vector<i128> gc(spec.arity + 1, 0);
    gc[0] = L;
    for (int i = 0; i < spec.arity; ++i) gc[i + 1] = chk_mul(t[i].num, L / t[i].den);
    poly::IPoly g(std::move(gc));
    i128 res = poly::resultant(spec.min_poly, g);
    i128 Lpow = 1;
    for (int i = 0; i <= spec.arity; ++i) Lpow = chk_mul(Lpow, L);
    return Rat(res, Lpow);
}

i128 norm_form_homogeneous(const NormFormSpec& spec, std::span<const i64> x) {
    if (int(x.size()) != spec.arity + 1)
        throw std::invalid_argument("norm_form_homogeneous: need n+1 coordinates");
    if (spec.arity == 1) {
        // f = x^2 + a1 x + a0, N = x0^2 - a1 x0 x1 + a0 x1^2
        i128 a1 = spec.min_poly.coeff(1), a0 = spec.min_poly.coeff(0);
        i128 x0 = x[0], x1 = x[1];
        return chk_add(chk_sub(chk_mul(x0, x0), chk_mul(a1, chk_mul(x0, x1))),
                       chk_mul(a0, chk_mul(x1, x1)));
    }
    std::vector<i128> gc(spec.arity + 1);
    for (int i = 0; i <= spec.arity; ++i) gc[i] = x[i];
    return poly::resultant(spec.min_poly, poly::IPoly(std::move(gc)));
}

}  // namespace manin::arith
