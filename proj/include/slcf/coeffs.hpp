#ifndef SLCF_COEFFS_HPP
#define SLCF_COEFFS_HPP

#include <string>
#include <variant>
#include <vector>

#include "slcf/common.hpp"

namespace slcf {

// Coefficient sequence a(1..N), immutable once built.  Divisor-type
// sequences fit 64-bit integers; the tau pipeline stores 128-bit values;
// normalized coefficients are doubles.
class ArithmeticSequence {
public:
    enum class Kind { integer, real };

    ArithmeticSequence(std::string name, std::vector<i64> v)
        : name_(std::move(name)), store_(std::move(v)) {}
    ArithmeticSequence(std::string name, std::vector<i128> v)
        : name_(std::move(name)), store_(std::move(v)) {}
    ArithmeticSequence(std::string name, std::vector<double> v)
        : name_(std::move(name)), store_(std::move(v)) {}

    const std::string& name() const { return name_; }

    i64 size() const {
        return std::visit([](const auto& v) { return i64(v.size()); }, store_);
    }

    Kind kind() const {
        return std::holds_alternative<std::vector<double>>(store_) ? Kind::real
                                                                   : Kind::integer;
    }
    bool wide() const { return std::holds_alternative<std::vector<i128>>(store_); }

    // 1-based accessors
    double at(i64 n) const {
        check(n);
        if (auto* a = std::get_if<std::vector<i64>>(&store_)) return double((*a)[n - 1]);
        if (auto* b = std::get_if<std::vector<i128>>(&store_)) return double((long double)(*b)[n - 1]);
        return std::get<std::vector<double>>(store_)[n - 1];
    }
    i64 at64(i64 n) const {
        check(n);
        return std::get<std::vector<i64>>(store_)[n - 1];
    }
    i128 at128(i64 n) const {
        check(n);
        if (auto* a = std::get_if<std::vector<i64>>(&store_)) return (*a)[n - 1];
        return std::get<std::vector<i128>>(store_)[n - 1];
    }

    const std::vector<i64>& values64() const { return std::get<std::vector<i64>>(store_); }
    const std::vector<i128>& values128() const { return std::get<std::vector<i128>>(store_); }
    const std::vector<double>& values_real() const { return std::get<std::vector<double>>(store_); }

    // Largest C with |a(n)| <= C * n^(theta+0.1) over the stored range.
    double ramanujan_constant(double theta) const;

private:
    void check(i64 n) const {
        require(n >= 1 && n <= size(), "sequence index out of range");
    }
    std::string name_;
    std::variant<std::vector<i64>, std::vector<i128>, std::vector<double>> store_;
};

// Exact cumulative sums; query() implements the primed-sum convention
// (the term at integral y is halved when primed is set).  Callers that need
// jump-free values sample at half-integers.
class PrefixSum {
public:
    explicit PrefixSum(const ArithmeticSequence& seq);
    i64 size() const { return i64(kind_ == 2 ? cum_real_.size() : kind_ == 1 ? cum_wide_.size() : cum_i64_.size()) - 1; }
    double query(double y, bool primed = false) const;
    // cumulative through n (0 <= n <= N), exact for integer kinds
    double cum(i64 n) const;
    double value(i64 n) const { return cum(n) - cum(n - 1); }

private:
    int kind_; // 0 = i64, 1 = i128, 2 = real
    std::vector<i64> cum_i64_;
    std::vector<i128> cum_wide_;
    std::vector<double> cum_real_;
};

ArithmeticSequence ones_sequence(i64 N);
ArithmeticSequence delta_sequence(i64 N); // 1,0,0,...

// d_k(n) for n <= N via k-1 sieved convolutions of the ones sequence.
ArithmeticSequence sieve_divisor(int k, i64 N);

ArithmeticSequence dirichlet_convolve(const ArithmeticSequence& a, const ArithmeticSequence& b);

ArithmeticSequence kronecker_sequence(i64 D, i64 N);
ArithmeticSequence quad_ideal_counts(i64 D, i64 N);

// Exact Ramanujan tau via the Jacobi eta-cube expansion and three exact
// self-convolutions over the modular transform primes, recombined by CRT.
ArithmeticSequence tau_coeffs(i64 N, i64 max_n = 2'000'000);
ArithmeticSequence normalized_lambda(i64 N, i64 max_n = 2'000'000);

// Rankin-Selberg coefficients c(n) = sum_{m^2 | n} lambda(n/m^2)^2.
ArithmeticSequence rankin_coeffs(i64 N, i64 max_n = 2'000'000);

double prefix_query(const PrefixSum& ps, double y, bool primed = false);

// Binary cache: magic "SLCF", version u16, kind u8, name, N u64, payload,
// CRC-32 of payload.  Written to a temp file and atomically renamed.
void write_cache(const ArithmeticSequence& seq, const std::string& path);
ArithmeticSequence read_cache(const std::string& path);

} // namespace slcf

#endif
