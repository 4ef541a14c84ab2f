#ifndef MANIN_RAT_HPP
#define MANIN_RAT_HPP

#include <stdexcept>
#include <string>

#include "manin/int128.hpp"

namespace manin {

// Exact rational, always stored reduced with positive denominator.
struct Rat {
    i128 num = 0;
    i128 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i128 n, i128 d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = chk_sub(0, num); den = chk_sub(0, den); }
        u128 g = gcd_u128(abs128(num), u128(den));
        if (g > 1) { num /= i128(g); den /= i128(g); }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(chk_add(chk_mul(a.num, b.den), chk_mul(b.num, a.den)), chk_mul(a.den, b.den));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(chk_sub(chk_mul(a.num, b.den), chk_mul(b.num, a.den)), chk_mul(a.den, b.den));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(chk_mul(a.num, b.num), chk_mul(a.den, b.den));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("division by zero rational");
        return Rat(chk_mul(a.num, b.den), chk_mul(a.den, b.num));
    }
    Rat operator-() const { return Rat(chk_sub(0, num), den); }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return chk_mul(a.num, b.den) < chk_mul(b.num, a.den);
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    double to_double() const { return double((long double)num / (long double)den); }

    std::string str() const {
        if (den == 1) return to_string_i128(num);
        return to_string_i128(num) + "/" + to_string_i128(den);
    }
};

}  // namespace manin

#endif
