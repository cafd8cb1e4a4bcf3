#include "doctest.h"

#include <cmath>

#include "slcf/coeffs.hpp"
#include "slcf/lvalues.hpp"
#include "slcf/ntt.hpp"

using namespace slcf;
using doctest::Approx;

TEST_CASE("transform primes are prime with verified roots") {
    for (const auto& pr : kNttPrimes) {
        REQUIRE(miller_rabin(pr.p));
        REQUIRE(miller_rabin(pr.odd_factor));
        u64 g = primitive_root(pr);
        CHECK(powmod(g, (pr.p - 1) / 2, pr.p) != 1);
        CHECK(powmod(g, (pr.p - 1) / pr.odd_factor, pr.p) != 1);
        CHECK(powmod(g, pr.p - 1, pr.p) == 1);
        // 2-adic support covers the transform lengths we use
        u64 two_part = (pr.p - 1);
        int k = 0;
        while ((two_part & 1) == 0) {
            two_part >>= 1;
            k++;
        }
        CHECK(k >= 24);
    }
}

TEST_CASE("ntt multiply matches schoolbook") {
    const auto& pr = kNttPrimes[0];
    u64 g = primitive_root(pr);
    std::vector<u64> a = {5, 0, 3, 2, 7, 1};
    std::vector<u64> b = {1, 9, 4};
    auto c = ntt_multiply(a, b, a.size() + b.size() - 1, pr.p, g);
    std::vector<u64> ref(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); i++)
        for (std::size_t j = 0; j < b.size(); j++)
            ref[i + j] = (ref[i + j] + a[i] * b[j]) % pr.p;
    REQUIRE(c.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); i++) REQUIRE(c[i] == ref[i]);
}

TEST_CASE("crt recovers signed values") {
    auto encode = [&](i128 v, u64* r, int np) {
        for (int i = 0; i < np; i++) {
            i128 m = v % i128(kNttPrimes[i].p);
            if (m < 0) m += i128(kNttPrimes[i].p);
            r[i] = u64(m);
        }
    };
    for (i128 v : {i128(0), i128(-1), i128(123456789), -(i128(1) << 100), (i128(3) << 110)}) {
        u64 r[3];
        encode(v, r, 3);
        CHECK(crt_signed(r, 3) == v);
    }
    u64 r[2];
    encode(i128(-987654321), r, 2);
    CHECK(crt_signed(r, 2) == i128(-987654321));
}

TEST_CASE("tau first values and the direct-expansion oracle") {
    auto tau = tau_coeffs(1000);
    // q prod (1-q^n)^24 expanded directly
    auto oracle = brute_tau(1000);
    for (i64 n = 1; n <= 1000; n++) REQUIRE(tau.at128(n) == oracle[std::size_t(n - 1)]);
    CHECK(i64(tau.at128(1)) == 1);
    CHECK(i64(tau.at128(2)) == -24);
    CHECK(i64(tau.at128(3)) == 252);
    CHECK(i64(tau.at128(4)) == -1472);
    CHECK(i64(tau.at128(5)) == 4830);
    CHECK(i64(tau.at128(6)) == -6048);
    CHECK(i64(tau.at128(7)) == -16744);
}

TEST_CASE("hecke relations") {
    const i64 N = 10000;
    auto tau = tau_coeffs(N);
    auto tval = [&](i64 n) { return tau.at128(n); };
    // multiplicativity on coprime pairs
    const i64 pairs[][2] = {{2, 3}, {3, 5}, {4, 9}, {8, 27}, {5, 49}, {11, 13}, {25, 16}};
    for (auto& pq : pairs) REQUIRE(tval(pq[0] * pq[1]) == tval(pq[0]) * tval(pq[1]));
    // tau(p^2) = tau(p)^2 - p^11 for primes up to 100
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                  73, 79, 83, 89, 97}) {
        i128 p11 = 1;
        for (int i = 0; i < 11; i++) p11 *= p;
        REQUIRE(tval(p * p) == tval(p) * tval(p) - p11);
    }
}

TEST_CASE("deligne bound for every computed n") {
    const i64 N = 20000;
    auto lam = normalized_lambda(N);
    auto d2 = sieve_divisor(2, N);
    for (i64 n = 1; n <= N; n++) {
        REQUIRE(std::abs(lam.at(n)) <= double(d2.at64(n)) * (1.0 + 1e-12));
    }
}

TEST_CASE("tau cap produces a clear failure") {
    CHECK_THROWS_AS((void)tau_coeffs(3'000'000, 2'000'000), Error);
}

TEST_CASE("rankin coefficients") {
    const i64 N = 2000;
    auto c = rankin_coeffs(N);
    auto lam = normalized_lambda(N);
    // c(n) = sum_{m^2 | n} lambda(n/m^2)^2 >= 0
    for (i64 n = 1; n <= N; n++) REQUIRE(c.at(n) >= 0.0);
    CHECK(c.at(1) == Approx(1.0));
    CHECK(c.at(2) == Approx(lam.at(2) * lam.at(2)));
    CHECK(c.at(4) == Approx(lam.at(4) * lam.at(4) + 1.0));
    CHECK(c.at(12) == Approx(lam.at(12) * lam.at(12) + lam.at(3) * lam.at(3)));
}
