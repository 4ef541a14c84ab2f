#include "manin/heights.hpp"

namespace manin::heights {

ProjPoint normalize(std::span<const i64> raw) {
    if (raw.empty()) throw std::invalid_argument("normalize: empty coordinate vector");
    u64 g = 0;
    for (i64 c : raw) g = std::gcd(g, u64(c < 0 ? -c : c));
    if (g == 0) throw std::invalid_argument("normalize: the zero vector is not a projective point");
    int sign = 0;
    for (i64 c : raw) {
        if (c != 0) { sign = c > 0 ? 1 : -1; break; }
    }
    ProjPoint p;
    p.coords.reserve(raw.size());
    for (i64 c : raw) p.coords.push_back(sign * (c / i64(g)));
    return p;
}

u64 naive_height(const ProjPoint& p) {
    u64 h = 0;
    for (i64 c : p.coords) h = std::max(h, u64(c < 0 ? -c : c));
    return h;
}

u128 height(const ProjPoint& p, const HeightSpec& spec) {
    u64 h = naive_height(p);
    if (spec.mode == HeightSpec::Mode::naive) return h;
    if (spec.ambient_dim != p.dim())
        throw std::invalid_argument("height: ambient dimension does not match the point");
    u128 r = 1;
    for (int i = 0; i <= spec.ambient_dim; ++i) r *= h;
    return r;
}

void enumerate(int dim, i64 T, const std::function<void(std::span<const i64>)>& visit) {
    enumerate_slices(dim, T, 0, T, visit);
}

void enumerate_range(int dim, i64 T, i64 k_lo, i64 k_hi,
                     const std::function<void(std::span<const i64>)>& visit) {
    enumerate_slices(dim, T, k_lo, k_hi, visit);
}

}  // namespace manin::heights
