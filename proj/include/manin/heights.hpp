#ifndef MANIN_HEIGHTS_HPP
#define MANIN_HEIGHTS_HPP

#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "manin/int128.hpp"

namespace manin::heights {

// Canonical representative of a point of P^n(Q): primitive integer
// coordinates, first nonzero coordinate positive.
struct ProjPoint {
    std::vector<i64> coords;
    int dim() const { return int(coords.size()) - 1; }
};

ProjPoint normalize(std::span<const i64> raw);  // rejects the zero vector

u64 naive_height(const ProjPoint& p);  // max |coord| on a canonical point

struct HeightSpec {
    enum class Mode { naive, anticanonical };
    Mode mode = Mode::anticanonical;
    int ambient_dim = 1;  // the n of P^n, used in anticanonical mode

    static HeightSpec naive() { return {Mode::naive, 0}; }
    static HeightSpec anticanonical(int n) { return {Mode::anticanonical, n}; }
};

// naive_height(p) in naive mode, naive_height(p)^(n+1) in anticanonical mode.
u128 height(const ProjPoint& p, const HeightSpec& spec);

inline constexpr int kMaxEnumDim = 6;

// Visit every canonical point of P^dim(Q) with naive height <= T whose last
// coordinate has absolute value in [k_lo, k_hi].  The outer loop runs over
// |last coordinate|, so disjoint [k_lo, k_hi] ranges partition the full point
// set and may be processed concurrently; the union of visits is independent
// of the partitioning.  Deterministic order for a fixed range.
template <typename Visitor>
void enumerate_slices(int dim, i64 T, i64 k_lo, i64 k_hi, Visitor&& visit) {
    if (dim < 1 || dim > kMaxEnumDim) throw std::invalid_argument("enumerate: dimension out of range");
    if (T < 1) throw std::invalid_argument("enumerate: bound must be >= 1");
    i64 x[kMaxEnumDim + 1];
    for (i64 k = std::max<i64>(0, k_lo); k <= std::min(k_hi, T); ++k) {
        // all-zero prefix: (0,...,0,k) is canonical only for k = 1
        if (k == 1) {
            for (int i = 0; i < dim; ++i) x[i] = 0;
            x[dim] = 1;
            visit(std::span<const i64>(x, dim + 1));
        }
        // j = index of the first nonzero coordinate, x[j] >= 1
        for (int j = 0; j < dim; ++j) {
            for (int i = 0; i < j; ++i) x[i] = 0;
            // odometer over x[j] in [1,T] and x[j+1..dim-1] in [-T,T]
            x[j] = 1;
            for (int i = j + 1; i < dim; ++i) x[i] = -T;
            while (true) {
                u64 g = u64(x[j]);
                for (int i = j + 1; i < dim && g != 1; ++i)
                    g = std::gcd(g, u64(x[i] < 0 ? -x[i] : x[i]));
                g = std::gcd(g, u64(k));
                if (g == 1) {
                    if (k == 0) {
                        x[dim] = 0;
                        visit(std::span<const i64>(x, dim + 1));
                    } else {
                        x[dim] = k;
                        visit(std::span<const i64>(x, dim + 1));
                        x[dim] = -k;
                        visit(std::span<const i64>(x, dim + 1));
                    }
                }
                // increment
                int i = dim - 1;
                for (; i > j; --i) {
                    if (x[i] < T) { ++x[i]; break; }
                    x[i] = -T;
                }
                if (i == j) {
                    if (x[j] < T) ++x[j];
                    else break;
                }
            }
        }
    }
}

// Whole-range wrappers (type-erased visitor).
void enumerate(int dim, i64 T, const std::function<void(std::span<const i64>)>& visit);
void enumerate_range(int dim, i64 T, i64 k_lo, i64 k_hi,
                     const std::function<void(std::span<const i64>)>& visit);

}  // namespace manin::heights

#endif
