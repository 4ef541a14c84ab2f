#ifndef MANIN_CHARACTERS_HPP
#define MANIN_CHARACTERS_HPP

#include <span>
#include <string>
#include <vector>

#include "manin/int128.hpp"

namespace manin::analytic {

// Real character of Q: principal, or the Kronecker character of a fundamental
// discriminant d (completely multiplicative, periodic mod |d|, trivial
// exactly on local norm classes of Q(sqrt(d))).
struct QuadCharacter {
    i64 disc = 0;  // 0 encodes the principal character

    bool principal() const { return disc == 0; }
    u64 conductor() const { return disc == 0 ? 1 : u64(disc < 0 ? -disc : disc); }
    int operator()(i128 n) const;  // chi(n) in {-1, 0, +1}
    std::string str() const { return disc == 0 ? "1" : "chi_" + std::to_string(disc); }

    static QuadCharacter principal_char() { return {}; }
    static QuadCharacter kronecker_char(i64 d);  // validates fundamental discriminant
    friend bool operator==(const QuadCharacter& a, const QuadCharacter& b) = default;
};

bool is_fundamental_discriminant(i64 d);

// chi_{d1} * chi_{d2} as a primitive character.
QuadCharacter operator*(const QuadCharacter& a, const QuadCharacter& b);

// Finite group of real characters: contains the principal character and is
// closed under products (verified on construction; order is a power of 2).
struct CharacterGroup {
    std::vector<QuadCharacter> members;  // principal first

    size_t order() const { return members.size(); }
    bool contains(const QuadCharacter& chi) const;

    // 1 iff rho(p) = 1 for every member rho (character-orthogonality average).
    int indicator(u64 p) const;
    // true iff p divides no member conductor
    bool unramified(u64 p) const;

    static CharacterGroup trivial();
    static CharacterGroup generated_by(std::span<const i64> discs);
    static CharacterGroup from_members(std::vector<QuadCharacter> members);  // verifies axioms
};

}  // namespace manin::analytic

#endif
