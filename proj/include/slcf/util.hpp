#ifndef SLCF_UTIL_HPP
#define SLCF_UTIL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "slcf/common.hpp"

namespace slcf {

// Compensated (Kahan-Neumaier) accumulator.  Sums are reproducible because
// every parallel loop below uses a fixed chunk decomposition and combines
// the per-chunk partials in index order.
class Kahan {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    void add(const Kahan& other) {
        add(other.comp_);
        add(other.sum_);
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Global worker cap set by the CLI --threads flag (0 = hardware default).
void set_thread_limit(unsigned n);
unsigned thread_limit();

// Splits [0,n) into a fixed number of chunks (independent of the worker
// count) and applies fn(chunk_index, begin, end) to each.  The chunk grid is
// what makes reductions deterministic.
void parallel_chunks(std::size_t n, std::size_t chunk_count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

// Deterministic parallel sum of fn over [0,n), compensated per chunk and
// combined in chunk order.
double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& fn,
                    std::size_t chunk_count = 256);

std::uint32_t crc32(const void* data, std::size_t len, std::uint32_t seed = 0);

// splitmix64: deterministic per-task stream seeding for Monte Carlo work.
inline u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(u64 seed, u64 stream = 0) {
        u64 s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        for (int i = 0; i < 4; i++) state_[i] = splitmix64(s);
    }
    u64 next_u64() {
        u64 result = rotl(state_[1] * 5, 7) * 9;
        u64 t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }
    // uniform in [0,1)
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

private:
    static u64 rotl(u64 x, int k) { return (x << k) | (x >> (64 - k)); }
    u64 state_[4];
};

// 17-significant-digit decimal formatting; round-trips doubles exactly.
std::string fmt_g17(double x);

} // namespace slcf

#endif
