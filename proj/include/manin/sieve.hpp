#ifndef MANIN_SIEVE_HPP
#define MANIN_SIEVE_HPP

#include <cstdint>
#include <vector>

#include "manin/int128.hpp"

namespace manin {

// Smallest-prime-factor tables shared by every factoring path.  Built once on
// first use, immutable afterwards, safe to read from any number of threads.
struct SmallSieve {
    std::uint32_t limit = 0;
    std::vector<std::uint32_t> spf;     // spf[n] = smallest prime factor, spf[1] = 1
    std::vector<std::uint32_t> primes;  // all primes <= limit
};

const SmallSieve& small_sieve();  // limit = 1'000'000

// Fresh plain prime list (used by the analytic module for larger cutoffs).
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Deterministic Miller-Rabin for n < 2^64; extended fixed witness set above.
bool is_prime_u64(u64 n);
bool is_prime_u128(u128 n);

// Nontrivial factor of an odd composite (Brent-cycle Pollard rho).
u64 pollard_rho_u64(u64 n);
u128 pollard_rho_u128(u128 n);

}  // namespace manin

#endif
