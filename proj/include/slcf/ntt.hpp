#ifndef SLCF_NTT_HPP
#define SLCF_NTT_HPP

#include <vector>

#include "slcf/common.hpp"

namespace slcf {

// Transform-friendly primes p = c * 2^k + 1 near 2^62, largest first.  Three
// of them cover |value| up to ~p1*p2*p3/2 ~ 1.4e54 in CRT range, far beyond
// the 128-bit storage bound that actually limits tau.
struct NttPrime {
    u64 p;
    u64 odd_factor; // the odd prime factor of (p-1)/2^k, for root checks
};

inline constexpr NttPrime kNttPrimes[3] = {
    {4179340454199820289ULL, 29}, // 29 * 2^57 + 1
    {1945555039024054273ULL, 3},  // 27 * 2^56 + 1
    {180143985094819841ULL, 5},   // 5  * 2^55 + 1
};

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
bool miller_rabin(u64 n);
// Smallest primitive root of an NTT prime (deterministic scan, verified).
u64 primitive_root(const NttPrime& pr);

// In-place forward/inverse NTT on a power-of-two length vector mod p.
void ntt(std::vector<u64>& a, u64 p, u64 g, bool inverse);

// c = a * b mod p, truncated to `keep` coefficients (polynomial product).
std::vector<u64> ntt_multiply(const std::vector<u64>& a, const std::vector<u64>& b,
                              std::size_t keep, u64 p, u64 g);

// Balanced CRT lift of residues mod the first `np` primes of kNttPrimes
// into a signed 128-bit value.  Throws if the mixed-radix top digit is too
// large for the 128-bit result to be trustworthy.
i128 crt_signed(const u64* residues, int np);

} // namespace slcf

#endif
