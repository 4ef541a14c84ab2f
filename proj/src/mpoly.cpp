#include "manin/mpoly.hpp"

#include <stdexcept>

namespace manin::mpoly {

MPoly MPoly::constant(int nvars, i128 c) {
    MPoly p;
    p.nvars = nvars;
    if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
    return p;
}

MPoly MPoly::var(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("MPoly::var: index out of range");
    MPoly p;
    p.nvars = nvars;
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.terms[std::move(e)] = 1;
    return p;
}

Rat MPoly::eval(std::span<const Rat> t) const {
    if (int(t.size()) != nvars) throw std::invalid_argument("MPoly::eval: arity mismatch");
    Rat sum(0);
    for (const auto& [e, c] : terms) {
        Rat term(c, 1);
        for (int i = 0; i < nvars; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * t[i];
        sum = sum + term;
    }
    return sum;
}

std::string MPoly::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms) {
        bool first = s.empty();
        if (!first) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        u128 mag = abs128(c);
        bool all_zero = true;
        for (int x : e)
            if (x) all_zero = false;
        if (mag != 1 || all_zero) s += to_string_u128(mag);
        for (int i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            s += "t" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

static void add_term(MPoly& p, const std::vector<int>& e, i128 c) {
    auto it = p.terms.find(e);
    if (it == p.terms.end()) {
        if (c != 0) p.terms[e] = c;
    } else {
        it->second = chk_add(it->second, c);
        if (it->second == 0) p.terms.erase(it);
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly r = a;
    for (const auto& [e, c] : b.terms) add_term(r, e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly r = a;
    for (const auto& [e, c] : b.terms) add_term(r, e, chk_sub(0, c));
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly r;
    r.nvars = a.nvars;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(a.nvars);
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            add_term(r, e, chk_mul(ca, cb));
        }
    }
    return r;
}

}  // namespace manin::mpoly
