#ifndef MANIN_INT128_HPP
#define MANIN_INT128_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace manin {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline u128 abs128(i128 x) { return x < 0 ? u128(-(x + 1)) + 1 : u128(x); }

inline std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    char buf[48];
    int i = 48;
    while (v > 0) { buf[--i] = char('0' + int(v % 10)); v /= 10; }
    return std::string(buf + i, buf + 48);
}

inline std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128(abs128(v));
    return to_string_u128(u128(v));
}

// Checked i128 arithmetic.  Inputs within the documented 127-bit envelope
// never trip these; anything larger is rejected rather than wrapped.
inline i128 chk_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow (128-bit) in addition");
    return r;
}

inline i128 chk_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow (128-bit) in subtraction");
    return r;
}

inline i128 chk_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow (128-bit) in multiplication");
    return r;
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) { u128 t = a % b; a = b; b = t; }
    return a;
}

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = m > 1 ? 1 : 0;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Shift-and-add mulmod for operands that may exceed 64 bits.  Slow but only
// reached by >64-bit factoring inputs, which are rare at desk scale.
inline u128 mulmod_u128(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (a == 0 || b == 0) return 0;
    if (a <= ~u128(0) / b) return (a * b) % m;
    u128 r = 0;
    while (b) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

inline u128 powmod_u128(u128 a, u128 e, u128 m) {
    u128 r = m > 1 ? 1 : 0;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u128(r, a, m);
        a = mulmod_u128(a, a, m);
        e >>= 1;
    }
    return r;
}

inline u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = u64(__builtin_sqrtl((long double)n));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n && r + 1 != 0) ++r;
    return r;
}

inline u128 isqrt_u128(u128 n) {
    if (n == 0) return 0;
    u128 r = (u128)__builtin_sqrtl((long double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square_u128(u128 n, u128& root) {
    root = isqrt_u128(n);
    return root * root == n;
}

}  // namespace manin

#endif
