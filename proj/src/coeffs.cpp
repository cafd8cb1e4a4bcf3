#include "slcf/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <atomic>
#include <cstring>
#include <thread>

#include "slcf/ntt.hpp"
#include "slcf/special.hpp"
#include "slcf/util.hpp"

namespace slcf {

namespace {

i64 checked_add(i64 a, i64 b, const char* what) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) fail(std::string(what) + ": 64-bit overflow");
    return r;
}

i128 checked_add128(i128 a, i128 b, const char* what) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) fail(std::string(what) + ": 128-bit overflow");
    return r;
}

} // namespace

double ArithmeticSequence::ramanujan_constant(double theta) const {
    double c = 0.0;
    i64 N = size();
    for (i64 n = 1; n <= N; n++) {
        double bound = std::pow(double(n), theta + 0.1);
        c = std::max(c, std::abs(at(n)) / bound);
    }
    return c;
}

PrefixSum::PrefixSum(const ArithmeticSequence& seq) {
    i64 N = seq.size();
    if (seq.kind() == ArithmeticSequence::Kind::real) {
        kind_ = 2;
        cum_real_.resize(N + 1);
        cum_real_[0] = 0.0;
        Kahan acc;
        for (i64 n = 1; n <= N; n++) {
            acc.add(seq.values_real()[n - 1]);
            cum_real_[n] = acc.value();
        }
    } else if (seq.wide()) {
        kind_ = 1;
        cum_wide_.resize(N + 1);
        cum_wide_[0] = 0;
        for (i64 n = 1; n <= N; n++)
            cum_wide_[n] = checked_add128(cum_wide_[n - 1], seq.values128()[n - 1], "prefix sum");
    } else {
        kind_ = 0;
        cum_i64_.resize(N + 1);
        cum_i64_[0] = 0;
        for (i64 n = 1; n <= N; n++)
            cum_i64_[n] = checked_add(cum_i64_[n - 1], seq.values64()[n - 1], "prefix sum");
    }
}

double PrefixSum::cum(i64 n) const {
    require(n >= 0 && n <= size(), "prefix index out of range");
    if (kind_ == 2) return cum_real_[n];
    if (kind_ == 1) return double((long double)cum_wide_[n]);
    return double(cum_i64_[n]);
}

double PrefixSum::query(double y, bool primed) const {
    require(y >= 0.0, "prefix_query: y must be nonnegative");
    require(y <= double(size()), "prefix_query: y beyond stored range");
    if (y < 1.0) return 0.0;
    double fl = std::floor(y);
    i64 n = i64(fl);
    double s = cum(n);
    if (primed && y == fl) s -= 0.5 * value(n);
    return s;
}

double prefix_query(const PrefixSum& ps, double y, bool primed) { return ps.query(y, primed); }

ArithmeticSequence ones_sequence(i64 N) {
    require(N >= 1, "ones_sequence: N >= 1");
    return ArithmeticSequence("ones", std::vector<i64>(std::size_t(N), 1));
}

ArithmeticSequence delta_sequence(i64 N) {
    require(N >= 1, "delta_sequence: N >= 1");
    std::vector<i64> v(std::size_t(N), 0);
    v[0] = 1;
    return ArithmeticSequence("delta", v);
}

ArithmeticSequence sieve_divisor(int k, i64 N) {
    require(k >= 1 && k <= 4, "sieve_divisor: order k in 1..4");
    require(N >= 1, "sieve_divisor: N >= 1");
    std::vector<i64> cur(std::size_t(N), 1);
    // d_k = ones * d_{k-1}; divisor-lattice accumulation, overflow-free
    // since d_4(n) <= n.  Work is partitioned by output range, so each slot
    // is touched by exactly one chunk.
    for (int pass = 2; pass <= k; pass++) {
        std::vector<i64> nxt(std::size_t(N), 0);
        parallel_chunks(std::size_t(N), 64, [&](std::size_t, std::size_t lo, std::size_t hi) {
            // slots [lo, hi) hold values for n in [lo+1, hi]
            for (i64 d = 1; d <= i64(hi); d++) {
                i64 v = cur[std::size_t(d - 1)];
                i64 first = (i64(lo) / d + 1) * d;
                for (i64 m = first; m <= i64(hi); m += d) nxt[std::size_t(m - 1)] += v;
            }
        });
        cur.swap(nxt);
    }
    char name[32];
    std::snprintf(name, sizeof(name), "d%d", k);
    return ArithmeticSequence(name, std::move(cur));
}

ArithmeticSequence dirichlet_convolve(const ArithmeticSequence& a, const ArithmeticSequence& b) {
    require(a.size() == b.size(), "dirichlet_convolve: sequences must have equal N");
    i64 N = a.size();
    std::string name = "(" + a.name() + "*" + b.name() + ")";
    bool real = a.kind() == ArithmeticSequence::Kind::real ||
                b.kind() == ArithmeticSequence::Kind::real;
    if (!real && (a.wide() || b.wide())) {
        // exact wide-integer convolution with checked arithmetic
        std::vector<i128> out(std::size_t(N), 0);
        std::atomic<bool> overflow{false};
        parallel_chunks(std::size_t(N), 64, [&](std::size_t, std::size_t lo, std::size_t hi) {
            for (i64 d = 1; d <= i64(hi); d++) {
                i128 x = a.at128(d);
                if (x == 0) continue;
                i64 first = (i64(lo) / d + 1) * d;
                for (i64 m = first; m <= i64(hi); m += d) {
                    i128 t, s;
                    if (__builtin_mul_overflow(x, b.at128(m / d), &t) ||
                        __builtin_add_overflow(out[std::size_t(m - 1)], t, &s)) {
                        overflow.store(true);
                        return;
                    }
                    out[std::size_t(m - 1)] = s;
                }
            }
        });
        require(!overflow.load(), "dirichlet_convolve: 128-bit overflow");
        return ArithmeticSequence(name, std::move(out));
    }
    if (!real) {
        const auto& av = a.values64();
        const auto& bv = b.values64();
        std::vector<i64> out(std::size_t(N), 0);
        std::atomic<bool> overflow{false};
        parallel_chunks(std::size_t(N), 64, [&](std::size_t, std::size_t lo, std::size_t hi) {
            for (i64 d = 1; d <= i64(hi); d++) {
                i64 x = av[std::size_t(d - 1)];
                if (x == 0) continue;
                i64 first = (i64(lo) / d + 1) * d;
                for (i64 m = first; m <= i64(hi); m += d) {
                    i64 t, s;
                    if (__builtin_mul_overflow(x, bv[std::size_t(m / d - 1)], &t) ||
                        __builtin_add_overflow(out[std::size_t(m - 1)], t, &s)) {
                        overflow.store(true);
                        return;
                    }
                    out[std::size_t(m - 1)] = s;
                }
            }
        });
        require(!overflow.load(), "dirichlet_convolve: 64-bit overflow");
        return ArithmeticSequence(name, std::move(out));
    }
    // kind mismatch (or any real operand) promotes to real
    std::vector<double> out(std::size_t(N), 0.0);
    parallel_chunks(std::size_t(N), 64, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (i64 d = 1; d <= i64(hi); d++) {
            double x = a.at(d);
            if (x == 0.0) continue;
            i64 first = (i64(lo) / d + 1) * d;
            for (i64 m = first; m <= i64(hi); m += d) out[std::size_t(m - 1)] += x * b.at(m / d);
        }
    });
    return ArithmeticSequence(name, std::move(out));
}

ArithmeticSequence kronecker_sequence(i64 D, i64 N) {
    require(is_fundamental_discriminant(D), "kronecker_sequence: D must be a fundamental discriminant");
    require(N >= 1, "kronecker_sequence: N >= 1");
    std::vector<i64> v(static_cast<std::size_t>(N));
    u64 q = u64(D < 0 ? -D : D);
    // chi is periodic mod |D|
    std::vector<i64> period(q);
    for (u64 r = 0; r < q; r++) period[r] = kronecker_symbol(D, r == 0 ? q : r);
    period[0] = kronecker_symbol(D, q);
    for (i64 n = 1; n <= N; n++) v[std::size_t(n - 1)] = period[u64(n) % q];
    char name[32];
    std::snprintf(name, sizeof(name), "chi_%lld", (long long)D);
    return ArithmeticSequence(name, std::move(v));
}

ArithmeticSequence quad_ideal_counts(i64 D, i64 N) {
    auto counts = dirichlet_convolve(ones_sequence(N), kronecker_sequence(D, N));
    char name[32];
    std::snprintf(name, sizeof(name), "ideals_%lld", (long long)D);
    return ArithmeticSequence(name, counts.values64());
}

namespace {

// eta(q)^3 / q^{1/8} = sum (-1)^k (2k+1) q^{k(k+1)/2}, truncated at degree < N.
std::vector<i64> jacobi_eta3(i64 N) {
    std::vector<i64> v(std::size_t(N), 0);
    for (i64 k = 0;; k++) {
        i64 e = k * (k + 1) / 2;
        if (e >= N) break;
        v[std::size_t(e)] = (k & 1) ? -(2 * k + 1) : (2 * k + 1);
    }
    return v;
}

} // namespace

ArithmeticSequence tau_coeffs(i64 N, i64 max_n) {
    require(N >= 1, "tau_coeffs: N >= 1");
    require(N <= max_n, "tau_coeffs: N exceeds the configured maximum (raise --tau-max)");

    // magnitude bound |tau(n)| <= d(n) n^{11/2} decides the prime count and
    // guards the 128-bit storage
    i64 dmax = 1;
    {
        auto d2 = sieve_divisor(2, N);
        const auto& dv = d2.values64();
        for (i64 n = 0; n < N; n++) dmax = std::max(dmax, dv[std::size_t(n)]);
    }
    long double bound = (long double)dmax * powl((long double)N, 5.5L);
    long double i128_max = 1.7014118346046923e38L;
    require(2.0L * bound < i128_max,
            "tau_coeffs: coefficient bound exceeds 128-bit storage; reduce N");
    int np = 0;
    long double prod = 1.0L;
    while (np < 3 && prod < 2.0L * bound) {
        prod *= (long double)kNttPrimes[np].p;
        np++;
    }
    if (prod < 2.0L * bound) {
        char msg[160];
        int needed = np;
        long double acc = prod;
        while (acc < 2.0L * bound) {
            acc *= (long double)kNttPrimes[2].p; // hypothetical extra primes of similar size
            needed++;
        }
        std::snprintf(msg, sizeof(msg),
                      "tau_coeffs: %d modular primes insufficient for N=%lld; %d required",
                      np, (long long)N, needed);
        fail(msg);
    }

    // eta3^2 fits comfortably in 64 bits at these sizes; square it directly.
    std::vector<i64> p2(std::size_t(N), 0);
    {
        std::vector<i64> j3 = jacobi_eta3(N);
        std::vector<std::pair<i64, i64>> sparse; // (degree, value)
        for (i64 e = 0; e < N; e++)
            if (j3[std::size_t(e)] != 0) sparse.push_back({e, j3[std::size_t(e)]});
        for (std::size_t i = 0; i < sparse.size(); i++) {
            for (std::size_t j = i; j < sparse.size(); j++) {
                i64 e = sparse[i].first + sparse[j].first;
                if (e >= N) break;
                i64 v = sparse[i].second * sparse[j].second;
                p2[std::size_t(e)] += (i == j) ? v : 2 * v;
            }
        }
    }

    // per-prime: p8 = ((p2)^2)^2 mod p, truncated to N coefficients
    std::vector<std::vector<u64>> residues(static_cast<std::size_t>(np));
    {
        std::vector<std::thread> pool;
        auto work = [&](int pi) {
            const auto& pr = kNttPrimes[pi];
            u64 p = pr.p;
            u64 g = primitive_root(pr);
            std::vector<u64> a(static_cast<std::size_t>(N));
            for (i64 n = 0; n < N; n++) {
                i64 v = p2[std::size_t(n)] % i64(p);
                a[std::size_t(n)] = v < 0 ? u64(v + i64(p)) : u64(v);
            }
            auto p4 = ntt_multiply(a, a, std::size_t(N), p, g);
            residues[std::size_t(pi)] = ntt_multiply(p4, p4, std::size_t(N), p, g);
        };
        unsigned workers = std::min<unsigned>(thread_limit(), unsigned(np));
        if (workers <= 1) {
            for (int pi = 0; pi < np; pi++) work(pi);
        } else {
            for (int pi = 1; pi < np; pi++) pool.emplace_back(work, pi);
            work(0);
            for (auto& t : pool) t.join();
        }
    }

    std::vector<i128> tau(static_cast<std::size_t>(N));
    for (i64 n = 1; n <= N; n++) {
        u64 r[3] = {0, 0, 0};
        for (int pi = 0; pi < np; pi++) r[pi] = residues[std::size_t(pi)][std::size_t(n - 1)];
        tau[std::size_t(n - 1)] = crt_signed(r, np); // tau(n) = [q^{n-1}] eta24
    }
    return ArithmeticSequence("tau", std::move(tau));
}

ArithmeticSequence normalized_lambda(i64 N, i64 max_n) {
    auto tau = tau_coeffs(N, max_n);
    std::vector<double> v(static_cast<std::size_t>(N));
    for (i64 n = 1; n <= N; n++) {
        long double t = (long double)tau.values128()[std::size_t(n - 1)];
        v[std::size_t(n - 1)] = double(t / powl((long double)n, 5.5L));
    }
    return ArithmeticSequence("lambda", std::move(v));
}

ArithmeticSequence rankin_coeffs(i64 N, i64 max_n) {
    auto lam = normalized_lambda(N, max_n);
    const auto& lv = lam.values_real();
    std::vector<double> c(std::size_t(N), 0.0);
    for (i64 m = 1; m * m <= N; m++)
        for (i64 k = 1; k * m * m <= N; k++) {
            double l = lv[std::size_t(k - 1)];
            c[std::size_t(k * m * m - 1)] += l * l;
        }
    return ArithmeticSequence("rankin", std::move(c));
}

// ---- cache I/O --------------------------------------------------------

namespace {

void put_u16(std::string& s, std::uint16_t v) {
    s.push_back(char(v & 0xff));
    s.push_back(char(v >> 8));
}
void put_u32(std::string& s, std::uint32_t v) {
    for (int i = 0; i < 4; i++) s.push_back(char((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& s, u64 v) {
    for (int i = 0; i < 8; i++) s.push_back(char((v >> (8 * i)) & 0xff));
}

struct Reader {
    const unsigned char* p;
    std::size_t n;
    std::size_t pos = 0;
    void need(std::size_t k) const { require(pos + k <= n, "cache: truncated file"); }
    std::uint16_t u16() {
        need(2);
        std::uint16_t v = std::uint16_t(p[pos] | (p[pos + 1] << 8));
        pos += 2;
        return v;
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; i++) v |= std::uint32_t(p[pos + std::size_t(i)]) << (8 * i);
        pos += 4;
        return v;
    }
    u64 u64v() {
        need(8);
        u64 v = 0;
        for (int i = 0; i < 8; i++) v |= u64(p[pos + std::size_t(i)]) << (8 * i);
        pos += 8;
        return v;
    }
    unsigned char byte() {
        need(1);
        return p[pos++];
    }
};

} // namespace

void write_cache(const ArithmeticSequence& seq, const std::string& path) {
    std::string payload;
    std::uint8_t kind;
    i64 N = seq.size();
    if (seq.kind() == ArithmeticSequence::Kind::real) {
        kind = 2;
        payload.reserve(std::size_t(N) * 8);
        for (double x : seq.values_real()) {
            u64 bits;
            std::memcpy(&bits, &x, 8);
            put_u64(payload, bits);
        }
    } else if (seq.wide()) {
        kind = 1;
        for (i128 x : seq.values128()) {
            bool neg = x < 0;
            u128 mag = neg ? u128(-x) : u128(x);
            u64 lo = u64(mag), hi = u64(mag >> 64);
            std::uint8_t nlimbs = hi ? 2 : (lo ? 1 : 0);
            payload.push_back(char(nlimbs | (neg ? 0x80 : 0)));
            if (nlimbs >= 1) put_u64(payload, lo);
            if (nlimbs == 2) put_u64(payload, hi);
        }
    } else {
        kind = 0;
        payload.reserve(std::size_t(N) * 8);
        for (i64 x : seq.values64()) put_u64(payload, u64(x));
    }

    std::string blob = "SLCF";
    put_u16(blob, 1); // version
    blob.push_back(char(kind));
    put_u32(blob, std::uint32_t(seq.name().size()));
    blob += seq.name();
    put_u64(blob, u64(N));
    blob += payload;
    put_u32(blob, crc32(payload.data(), payload.size()));

    std::string tmp = path + ".tmp";
    FILE* f = std::fopen(tmp.c_str(), "wb");
    require(f != nullptr, "cache: cannot open " + tmp);
    std::size_t written = std::fwrite(blob.data(), 1, blob.size(), f);
    std::fclose(f);
    require(written == blob.size(), "cache: short write to " + tmp);
    require(std::rename(tmp.c_str(), path.c_str()) == 0, "cache: rename failed for " + path);
}

ArithmeticSequence read_cache(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "rb");
    require(f != nullptr, "cache: cannot open " + path);
    std::fseek(f, 0, SEEK_END);
    long len = std::ftell(f);
    std::fseek(f, 0, SEEK_SET);
    std::vector<unsigned char> buf(static_cast<std::size_t>(len));
    std::size_t got = std::fread(buf.data(), 1, std::size_t(len), f);
    std::fclose(f);
    require(got == std::size_t(len), "cache: short read from " + path);

    Reader r{buf.data(), buf.size()};
    r.need(4);
    require(std::memcmp(r.p, "SLCF", 4) == 0, "cache: bad magic");
    r.pos = 4;
    std::uint16_t version = r.u16();
    require(version == 1, "cache: unsupported version");
    std::uint8_t kind = r.byte();
    std::uint32_t name_len = r.u32();
    r.need(name_len);
    std::string name(reinterpret_cast<const char*>(r.p + r.pos), name_len);
    r.pos += name_len;
    u64 N = r.u64v();
    std::size_t payload_begin = r.pos;

    if (kind == 0) {
        std::vector<i64> v(static_cast<std::size_t>(N));
        for (u64 i = 0; i < N; i++) v[std::size_t(i)] = i64(r.u64v());
        std::size_t payload_end = r.pos;
        std::uint32_t crc = r.u32();
        require(crc == crc32(buf.data() + payload_begin, payload_end - payload_begin),
                "cache: CRC mismatch");
        return ArithmeticSequence(name, std::move(v));
    }
    if (kind == 1) {
        std::vector<i128> v(static_cast<std::size_t>(N));
        for (u64 i = 0; i < N; i++) {
            unsigned char hdr = r.byte();
            bool neg = hdr & 0x80;
            int nlimbs = hdr & 0x7f;
            require(nlimbs <= 2, "cache: bad limb count");
            u128 mag = 0;
            if (nlimbs >= 1) mag = r.u64v();
            if (nlimbs == 2) mag |= u128(r.u64v()) << 64;
            v[std::size_t(i)] = neg ? -i128(mag) : i128(mag);
        }
        std::size_t payload_end = r.pos;
        std::uint32_t crc = r.u32();
        require(crc == crc32(buf.data() + payload_begin, payload_end - payload_begin),
                "cache: CRC mismatch");
        return ArithmeticSequence(name, std::move(v));
    }
    require(kind == 2, "cache: unknown kind tag");
    std::vector<double> v(static_cast<std::size_t>(N));
    for (u64 i = 0; i < N; i++) {
        u64 bits = r.u64v();
        double x;
        std::memcpy(&x, &bits, 8);
        v[std::size_t(i)] = x;
    }
    std::size_t payload_end = r.pos;
    std::uint32_t crc = r.u32();
    require(crc == crc32(buf.data() + payload_begin, payload_end - payload_begin),
            "cache: CRC mismatch");
    return ArithmeticSequence(name, std::move(v));
}

} // namespace slcf
