#ifndef SLCF_ERROR_TERM_HPP
#define SLCF_ERROR_TERM_HPP

#include <memory>

#include "slcf/coeffs.hpp"
#include "slcf/lfunc.hpp"

namespace slcf {

// E(y) = A(y) - Q(y) against a prepared prefix-sum table.  The classical
// flag drops the s=0 constant from Q, matching the Delta(x) convention of
// the divisor-problem literature.
class ErrorTerm {
public:
    ErrorTerm(const LFunctionInstance& inst, const ArithmeticSequence& coeffs,
              bool classical = false)
        : inst_(&inst), prefix_(coeffs), classical_(classical) {}

    double main(double y) const {
        double q = inst_->main0(y);
        if (classical_) q -= inst_->main.phi0();
        return q;
    }
    double operator()(double y, bool primed = false) const {
        return prefix_.query(y, primed) - main(y);
    }
    // piece access: on [n, n+1) the summatory part is cum(n)
    double cum(i64 n) const { return prefix_.cum(n); }
    i64 range() const { return prefix_.size(); }
    const LFunctionInstance& inst() const { return *inst_; }

private:
    const LFunctionInstance* inst_;
    PrefixSum prefix_;
    bool classical_;
};

} // namespace slcf

#endif
