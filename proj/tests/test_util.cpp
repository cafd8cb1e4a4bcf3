#include "doctest.h"

#include <cmath>
#include <cstdio>

#include "slcf/util.hpp"

using namespace slcf;

TEST_CASE("kahan summation keeps tiny increments") {
    Kahan acc;
    acc.add(1.0);
    for (int i = 0; i < 1000000; i++) acc.add(1e-18);
    CHECK(acc.value() == doctest::Approx(1.0 + 1e-12).epsilon(1e-14));
}

TEST_CASE("parallel_sum is deterministic across thread counts") {
    auto f = [](std::size_t i) { return std::sin(0.001 * double(i + 1)); };
    set_thread_limit(1);
    double s1 = parallel_sum(200000, f);
    set_thread_limit(4);
    double s4 = parallel_sum(200000, f);
    set_thread_limit(0);
    CHECK(s1 == s4); // bit identical
}

TEST_CASE("crc32 known vector") {
    // standard test vector: crc32("123456789") = 0xCBF43926
    const char* s = "123456789";
    CHECK(crc32(s, 9) == 0xCBF43926u);
}

TEST_CASE("rng streams are deterministic and distinct") {
    Rng a(42, 0), b(42, 0), c(42, 1);
    CHECK(a.next_u64() == b.next_u64());
    Rng a2(42, 0);
    CHECK(a2.next_u64() != c.next_u64());
    double x = c.next_double();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
}

TEST_CASE("g17 formatting round-trips") {
    double v = 0.1234567890123456789;
    double back = std::strtod(fmt_g17(v).c_str(), nullptr);
    CHECK(back == v);
}
