#include "manin/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace manin::poly {

IPoly IPoly::from(std::initializer_list<i64> coeffs) {
    std::vector<i128> v(coeffs.begin(), coeffs.end());
    return IPoly(std::move(v));
}

Rat IPoly::eval(const Rat& t) const {
    Rat r(0);
    for (int i = degree(); i >= 0; --i) r = r * t + Rat(c[i], 1);
    return r;
}

i128 IPoly::eval_i(i128 t) const {
    i128 r = 0;
    for (int i = degree(); i >= 0; --i) r = chk_add(chk_mul(r, t), c[i]);
    return r;
}

i128 IPoly::eval_homogeneous(i64 x0, i64 x1) const {
    if (is_zero()) return 0;
    // sum_i c[i] * x1^i * x0^(d-i): Horner in x1 with a running power of x0
    i128 r = 0, p0 = 1;
    for (int i = degree(); i >= 0; --i) {
        r = chk_add(chk_mul(r, x1), chk_mul(c[i], p0));
        if (i > 0) p0 = chk_mul(p0, x0);
    }
    return r;
}

IPoly IPoly::derivative() const {
    if (degree() <= 0) return IPoly{};
    std::vector<i128> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = chk_mul(c[i], i128(i));
    return IPoly(std::move(d));
}

i128 IPoly::content() const {
    u128 g = 0;
    for (i128 x : c) g = gcd_u128(g, abs128(x));
    return i128(g);
}

IPoly IPoly::primitive_part() const {
    if (is_zero()) return IPoly{};
    i128 g = content();
    std::vector<i128> v(c);
    for (i128& x : v) x /= g;
    if (v.back() < 0)
        for (i128& x : v) x = -x;
    return IPoly(std::move(v));
}

std::string IPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        i128 a = c[i];
        bool first = s.empty();
        if (!first) s += a < 0 ? " - " : " + ";
        else if (a < 0) s += "-";
        u128 mag = abs128(a);
        bool unit = (mag == 1) && i > 0;
        if (!unit) s += to_string_u128(mag);
        if (i > 0) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

IPoly mul(const IPoly& a, const IPoly& b) {
    if (a.is_zero() || b.is_zero()) return IPoly{};
    std::vector<i128> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = chk_add(r[i + j], chk_mul(a.c[i], b.c[j]));
    return IPoly(std::move(r));
}

IPoly add(const IPoly& a, const IPoly& b) {
    std::vector<i128> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = chk_add(a.coeff(int(i)), b.coeff(int(i)));
    return IPoly(std::move(r));
}

IPoly neg(const IPoly& a) {
    std::vector<i128> r(a.c);
    for (i128& x : r) x = chk_sub(0, x);
    return IPoly(std::move(r));
}

// Rational-coefficient polynomial used internally for exact division / gcd.
namespace {

struct QPoly {
    std::vector<Rat> c;
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int degree() const { return int(c.size()) - 1; }
    static QPoly from(const IPoly& p) {
        QPoly q;
        q.c.reserve(p.c.size());
        for (i128 x : p.c) q.c.push_back(Rat(x, 1));
        return q;
    }
};

// a mod b and a div b over Q (b nonzero).
void divmod_q(QPoly a, const QPoly& b, QPoly& quo, QPoly& rem) {
    quo.c.assign(a.degree() >= b.degree() && a.degree() >= 0
                     ? a.degree() - b.degree() + 1
                     : 0,
                 Rat(0));
    while (a.degree() >= b.degree() && a.degree() >= 0) {
        int shift = a.degree() - b.degree();
        Rat q = a.c.back() / b.c.back();
        quo.c[shift] = q;
        for (int i = 0; i <= b.degree(); ++i)
            a.c[i + shift] = a.c[i + shift] - q * b.c[i];
        a.trim();
    }
    rem = a;
}

IPoly to_primitive(const QPoly& q) {
    // clear denominators, strip content
    i128 lcm = 1;
    for (const Rat& r : q.c) {
        u128 g = gcd_u128(u128(lcm), u128(r.den));
        lcm = chk_mul(lcm, r.den / i128(g));
    }
    std::vector<i128> v;
    v.reserve(q.c.size());
    for (const Rat& r : q.c) v.push_back(chk_mul(r.num, lcm / r.den));
    return IPoly(std::move(v)).primitive_part();
}

}  // namespace

bool divide_exact(const IPoly& a, const IPoly& b, IPoly& quotient) {
    if (b.is_zero()) return false;
    QPoly quo, rem;
    divmod_q(QPoly::from(a), QPoly::from(b), quo, rem);
    rem.trim();
    if (!rem.c.empty()) return false;
    quotient = to_primitive(quo);  // content and sign dropped (factors are primitive)
    return true;
}

IPoly gcd_q(const IPoly& a, const IPoly& b) {
    QPoly x = QPoly::from(a), y = QPoly::from(b);
    x.trim();
    y.trim();
    while (!y.c.empty()) {
        QPoly quo, rem;
        divmod_q(x, y, quo, rem);
        rem.trim();
        x = y;
        y = rem;
    }
    if (x.c.empty()) return IPoly{};
    return to_primitive(x);
}

bool is_squarefree(const IPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return gcd_q(f, f.derivative()).degree() == 0;
}

i128 resultant(const IPoly& a, const IPoly& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    int size = m + n;
    if (size == 0) return 1;
    // Sylvester matrix, then fraction-free Bareiss elimination.
    std::vector<std::vector<i128>> M(size, std::vector<i128>(size, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = a.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.c[n - j];
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (M[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i)
                if (M[i][k] != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                i128 t = chk_sub(chk_mul(M[i][j], M[k][k]), chk_mul(M[i][k], M[k][j]));
                M[i][j] = t / prev;  // exact by Bareiss
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[size - 1][size - 1] : chk_sub(0, M[size - 1][size - 1]);
}

// --- factorization over Q ---------------------------------------------------

namespace {

std::vector<i128> divisors_of(i128 n) {
    std::vector<i128> out;
    u128 a = abs128(n);
    for (u128 d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(i128(d));
            if (d != a / d) out.push_back(i128(a / d));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

double l2_norm(const IPoly& f) {
    double s = 0;
    for (i128 x : f.c) {
        double v = double((long double)x);
        s += v * v;
    }
    return std::sqrt(s);
}

// Mignotte: any integer factor g of f with deg g = k has |g|_inf bounded by
// 2^k * |f|_2 * |lc(g)/lc(f)| <= 2^k * |f|_2 (lc(g) divides lc(f)).
i128 mignotte_bound(const IPoly& f, int k) {
    double b = std::ldexp(l2_norm(f), k) + 1.0;
    if (b > 9e17) throw std::overflow_error("factor coefficient bound out of range");
    return i128(i64(b));
}

// all linear factors q*x - p (p/q root), removed with multiplicity
void strip_rational_roots(IPoly& f, std::vector<std::pair<IPoly, int>>& out) {
    bool progress = true;
    while (progress && f.degree() >= 1) {
        progress = false;
        auto ps = divisors_of(f.c.front() == 0 ? 1 : f.c.front());
        auto qs = divisors_of(f.lead());
        if (f.c.front() == 0) {
            IPoly x = IPoly::from({0, 1});
            IPoly quo;
            if (divide_exact(f, x, quo)) {
                bool found = false;
                for (auto& [g, m] : out)
                    if (g == x) { ++m; found = true; }
                if (!found) out.push_back({x, 1});
                f = quo;
                progress = true;
                continue;
            }
        }
        for (i128 p : ps) {
            for (i128 q : qs) {
                if (gcd_u128(abs128(p), abs128(q)) != 1) continue;
                for (int s : {1, -1}) {
                    Rat root(s * p, q);
                    if (!f.eval(root).is_zero()) continue;
                    IPoly lin(std::vector<i128>{chk_sub(0, s * p), q});
                    lin = lin.primitive_part();
                    IPoly quo;
                    if (!divide_exact(f, lin, quo)) continue;
                    bool found = false;
                    for (auto& [g, m] : out)
                        if (g == lin) { ++m; found = true; }
                    if (!found) out.push_back({lin, 1});
                    f = quo;
                    progress = true;
                    goto next_pass;
                }
            }
        }
    next_pass:;
    }
}

// smallest-degree irreducible factor of a rootless primitive f (deg 4..6),
// searching quadratic then cubic candidates by undetermined coefficients
bool find_small_factor(const IPoly& f, IPoly& factor_out) {
    int d = f.degree();
    for (int k : {2, 3}) {
        if (k >= d) break;            // proper factor only
        if (d == 4 && k == 3) break;  // deg-3 factor of rootless deg-4 implies a root
        i128 bound = mignotte_bound(f, k);
        auto lead_divs = divisors_of(f.lead());
        auto const_divs = divisors_of(f.c.front());
        for (i128 a : lead_divs) {
            for (i128 c0 : const_divs) {
                for (int cs : {1, -1}) {
                    i128 cc = cs * c0;
                    if (k == 2) {
                        for (i128 b = -bound; b <= bound; ++b) {
                            IPoly g(std::vector<i128>{cc, b, a});
                            IPoly quo;
                            if (divide_exact(f, g, quo)) {
                                factor_out = g.primitive_part();
                                return true;
                            }
                        }
                    } else {
                        for (i128 b1 = -bound; b1 <= bound; ++b1) {
                            for (i128 b2 = -bound; b2 <= bound; ++b2) {
                                IPoly g(std::vector<i128>{cc, b1, b2, a});
                                IPoly quo;
                                if (divide_exact(f, g, quo)) {
                                    factor_out = g.primitive_part();
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

std::vector<std::pair<IPoly, int>> factor_q(const IPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (f.degree() > 6)
        throw std::invalid_argument("polynomial factorization is capped at degree 6");
    std::vector<std::pair<IPoly, int>> out;
    IPoly g = f.primitive_part();
    if (g.degree() == 0) return out;
    strip_rational_roots(g, out);
    // remaining part: rootless; split off quadratic/cubic factors until done
    while (g.degree() >= 2) {
        if (g.degree() <= 3) {  // rootless deg 2/3 is irreducible
            bool found = false;
            for (auto& [h, m] : out)
                if (h == g) { ++m; found = true; }
            if (!found) out.push_back({g.primitive_part(), 1});
            break;
        }
        IPoly piece;
        if (!find_small_factor(g, piece)) {
            bool found = false;
            for (auto& [h, m] : out)
                if (h == g) { ++m; found = true; }
            if (!found) out.push_back({g.primitive_part(), 1});
            break;
        }
        // piece may itself be reducible only if cubic with a root; it is not,
        // since g is rootless -- record and continue with the quotient
        bool found = false;
        for (auto& [h, m] : out)
            if (h == piece) { ++m; found = true; }
        if (!found) out.push_back({piece, 1});
        IPoly quo;
        divide_exact(g, piece, quo);
        g = quo;
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        return x.first.c < y.first.c;
    });
    return out;
}

}  // namespace manin::poly
