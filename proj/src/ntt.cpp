#include "slcf/ntt.hpp"

#include <algorithm>

namespace slcf {

u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        s++;
    }
    // deterministic witness set for 64-bit
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; i++) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 primitive_root(const NttPrime& pr) {
    u64 p = pr.p;
    for (u64 g = 2;; g++) {
        if (powmod(g, (p - 1) / 2, p) == 1) continue;
        if (powmod(g, (p - 1) / pr.odd_factor, p) == 1) continue;
        return g;
    }
}

void ntt(std::vector<u64>& a, u64 p, u64 g, bool inverse) {
    std::size_t n = a.size();
    require((n & (n - 1)) == 0, "ntt: length must be a power of two");
    require((p - 1) % n == 0, "ntt: length not supported by prime");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; i++) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        u64 w = powmod(g, (p - 1) / len, p);
        if (inverse) w = powmod(w, p - 2, p);
        for (std::size_t i = 0; i < n; i += len) {
            u64 wn = 1;
            for (std::size_t k = 0; k < len / 2; k++) {
                u64 u = a[i + k];
                u64 v = mulmod(a[i + k + len / 2], wn, p);
                a[i + k] = u + v < p ? u + v : u + v - p;
                a[i + k + len / 2] = u >= v ? u - v : u + p - v;
                wn = mulmod(wn, w, p);
            }
        }
    }
    if (inverse) {
        u64 ninv = powmod(u64(n), p - 2, p);
        for (auto& x : a) x = mulmod(x, ninv, p);
    }
}

std::vector<u64> ntt_multiply(const std::vector<u64>& a, const std::vector<u64>& b,
                              std::size_t keep, u64 p, u64 g) {
    std::size_t need = std::min(keep, a.size() + b.size() - 1);
    std::size_t len = 1;
    while (len < a.size() + b.size() - 1) len <<= 1;
    std::vector<u64> fa(a);
    fa.resize(len, 0);
    ntt(fa, p, g, false);
    if (&a == &b) {
        for (auto& x : fa) x = mulmod(x, x, p);
    } else {
        std::vector<u64> fb(b);
        fb.resize(len, 0);
        ntt(fb, p, g, false);
        for (std::size_t i = 0; i < len; i++) fa[i] = mulmod(fa[i], fb[i], p);
    }
    ntt(fa, p, g, true);
    fa.resize(need);
    return fa;
}

i128 crt_signed(const u64* r, int np) {
    require(np >= 1 && np <= 3, "crt_signed: 1..3 primes supported");
    const u64 p1 = kNttPrimes[0].p;
    if (np == 1) {
        u64 v = r[0];
        return (v > p1 / 2) ? i128(v) - i128(p1) : i128(v);
    }
    const u64 p2 = kNttPrimes[1].p;
    // d0 + p1*d1 (+ p1*p2*d2)
    u64 d0 = r[0];
    u64 inv_p1_mod_p2 = powmod(p1 % p2, p2 - 2, p2);
    u64 t = r[1] >= d0 % p2 ? r[1] - d0 % p2 : r[1] + p2 - d0 % p2;
    u64 d1 = mulmod(t, inv_p1_mod_p2, p2);
    i128 P12 = i128(p1) * i128(p2);
    i128 x01 = i128(d0) + i128(p1) * i128(d1);
    if (np == 2) {
        return (x01 > P12 / 2) ? x01 - P12 : x01;
    }
    const u64 p3 = kNttPrimes[2].p;
    u64 x01_mod_p3 = u64((u128(x01) % p3)); // x01 >= 0 < p1*p2
    u64 inv_P12_mod_p3 = powmod(mulmod(p1 % p3, p2 % p3, p3), p3 - 2, p3);
    u64 t3 = r[2] >= x01_mod_p3 ? r[2] - x01_mod_p3 : r[2] + p3 - x01_mod_p3;
    u64 d2 = mulmod(t3, inv_P12_mod_p3, p3);
    // balanced top digit; a genuine 128-bit value keeps it tiny
    i128 d2b = (d2 > p3 / 2) ? i128(d2) - i128(p3) : i128(d2);
    require(d2b < 16 && d2b > -16, "crt_signed: value exceeds 128-bit range");
    return x01 + P12 * d2b;
}

} // namespace slcf
