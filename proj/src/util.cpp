#include "slcf/util.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

namespace slcf {

namespace {
std::atomic<unsigned> g_thread_limit{0};
}

void set_thread_limit(unsigned n) { g_thread_limit.store(n); }

unsigned thread_limit() {
    unsigned n = g_thread_limit.load();
    if (n == 0) {
        n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
    }
    return n;
}

void parallel_chunks(std::size_t n, std::size_t chunk_count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    chunk_count = std::max<std::size_t>(1, std::min(chunk_count, n));
    unsigned workers = std::min<std::size_t>(thread_limit(), chunk_count);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunk_count; c++) {
            std::size_t b = n * c / chunk_count;
            std::size_t e = n * (c + 1) / chunk_count;
            fn(c, b, e);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= chunk_count) break;
            std::size_t b = n * c / chunk_count;
            std::size_t e = n * (c + 1) / chunk_count;
            fn(c, b, e);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; i++) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& fn,
                    std::size_t chunk_count) {
    if (n == 0) return 0.0;
    chunk_count = std::max<std::size_t>(1, std::min(chunk_count, n));
    std::vector<Kahan> partial(chunk_count);
    parallel_chunks(n, chunk_count, [&](std::size_t c, std::size_t b, std::size_t e) {
        Kahan acc;
        for (std::size_t i = b; i < e; i++) acc.add(fn(i));
        partial[c] = acc;
    });
    Kahan total;
    for (const auto& p : partial) total.add(p);
    return total.value();
}

std::uint32_t crc32(const void* data, std::size_t len, std::uint32_t seed) {
    static std::uint32_t table[256];
    static bool init = false;
    if (!init) {
        for (std::uint32_t i = 0; i < 256; i++) {
            std::uint32_t c = i;
            for (int k = 0; k < 8; k++) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
            table[i] = c;
        }
        init = true;
    }
    std::uint32_t c = seed ^ 0xffffffffu;
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; i++) c = table[(c ^ p[i]) & 0xff] ^ (c >> 8);
    return c ^ 0xffffffffu;
}

std::string fmt_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace slcf
