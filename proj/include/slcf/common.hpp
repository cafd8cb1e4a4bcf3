#ifndef SLCF_COMMON_HPP
#define SLCF_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace slcf {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128_t;
using u128 = __uint128_t;
using cplx = std::complex<double>;

inline constexpr const char* kVersion = "1.0.0";

// Euler-Mascheroni and Stieltjes constants, used in the main-term
// log-polynomials for the zeta-power instances.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kStieltjes1 = -0.07281584548367672486058637587490132;
inline constexpr double kStieltjes2 = -0.00969036319287231848453038603521259;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kZeta2 = 1.64493406684822643647241516664602519; // pi^2/6
inline constexpr double kZeta3 = 1.20205690315959428539973816151144999;

// All library failures are reported through one exception type; the message
// names the violated precondition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

} // namespace slcf

#endif
