#ifndef MANIN_MPOLY_HPP
#define MANIN_MPOLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "manin/int128.hpp"
#include "manin/rat.hpp"

namespace manin::mpoly {

// Sparse multivariate integer polynomial in variables t1..tn.
struct MPoly {
    int nvars = 0;
    std::map<std::vector<int>, i128> terms;  // exponent vector -> coefficient

    static MPoly constant(int nvars, i128 c);
    static MPoly var(int nvars, int index);  // t_{index+1}

    bool is_zero() const { return terms.empty(); }
    Rat eval(std::span<const Rat> t) const;
    std::string str() const;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);

}  // namespace manin::mpoly

#endif
