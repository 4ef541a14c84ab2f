#include "manin/characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "manin/arith.hpp"

namespace manin::analytic {

int QuadCharacter::operator()(i128 n) const {
    if (disc == 0) return n == 0 ? 0 : 1;  // principal character of Q
    return arith::kronecker(disc, n);
}

bool is_fundamental_discriminant(i64 d) {
    if (d == 0 || d == 1) return false;
    i64 m4 = ((d % 4) + 4) % 4;
    if (m4 == 1) return arith::squarefree_kernel(d) == d;
    if (m4 != 0) return false;
    i64 m = d / 4;
    i64 mm4 = ((m % 4) + 4) % 4;
    return (mm4 == 2 || mm4 == 3) && arith::squarefree_kernel(m) == m;
}

QuadCharacter QuadCharacter::kronecker_char(i64 d) {
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument(std::to_string(d) + " is not a fundamental discriminant");
    return QuadCharacter{d};
}

QuadCharacter operator*(const QuadCharacter& a, const QuadCharacter& b) {
    if (a.principal()) return b;
    if (b.principal()) return a;
    i128 m = arith::squarefree_kernel(chk_mul(i128(a.disc), i128(b.disc)));
    if (m == 1) return QuadCharacter::principal_char();
    i64 ms = i64(m);
    i64 d = (((ms % 4) + 4) % 4 == 1) ? ms : 4 * ms;
    return QuadCharacter::kronecker_char(d);
}

bool CharacterGroup::contains(const QuadCharacter& chi) const {
    return std::find(members.begin(), members.end(), chi) != members.end();
}

int CharacterGroup::indicator(u64 p) const {
    for (const QuadCharacter& rho : members)
        if (rho(i128(p)) != 1) return 0;
    return 1;
}

bool CharacterGroup::unramified(u64 p) const {
    for (const QuadCharacter& rho : members)
        if (rho.conductor() % p == 0) return false;
    return true;
}

CharacterGroup CharacterGroup::trivial() {
    CharacterGroup g;
    g.members.push_back(QuadCharacter::principal_char());
    return g;
}

CharacterGroup CharacterGroup::from_members(std::vector<QuadCharacter> members) {
    CharacterGroup g;
    g.members = std::move(members);
    if (g.members.empty() || !g.members.front().principal())
        throw std::invalid_argument("character group: principal member must come first");
    for (size_t i = 0; i < g.members.size(); ++i)
        for (size_t j = i; j < g.members.size(); ++j)
            if (!g.contains(g.members[i] * g.members[j]))
                throw std::invalid_argument("character group: not closed under products");
    size_t n = g.members.size();
    if ((n & (n - 1)) != 0)
        throw std::invalid_argument("character group: order must be a power of 2");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (g.members[i] == g.members[j])
                throw std::invalid_argument("character group: repeated member");
    return g;
}

CharacterGroup CharacterGroup::generated_by(std::span<const i64> discs) {
    std::vector<QuadCharacter> members{QuadCharacter::principal_char()};
    for (i64 d : discs) {
        QuadCharacter chi = QuadCharacter::kronecker_char(d);
        std::vector<QuadCharacter> next = members;
        for (const QuadCharacter& m : members) {
            QuadCharacter prod = m * chi;
            if (std::find(next.begin(), next.end(), prod) == next.end()) next.push_back(prod);
        }
        members = std::move(next);
    }
    std::sort(members.begin(), members.end(),
              [](const QuadCharacter& a, const QuadCharacter& b) {
                  if (a.principal() != b.principal()) return a.principal();
                  return a.disc < b.disc;
              });
    return from_members(std::move(members));
}

}  // namespace manin::analytic
