#pragma once

#include "wheelzeta/chipfire.hpp"
#include "wheelzeta/univariate.hpp"

#include <optional>
#include <vector>

namespace wheelzeta {

/// rho^j: left cyclic rotation by j (mod k). rho([1,0,4]) = [0,4,1].
Configuration rotate(const Configuration& c, long j = 1);

/// Periodic extension w -> ww...w into W_{k2}; requires k | k2.
Configuration embed(const Configuration& c, unsigned k2);

/// Critical representative of sum_j p_j rho^j(c).
Configuration apply_rho_poly(const IntPolynomial& p, const Configuration& c);

/// Elements of the enumerated group killed by p(rho).
std::vector<Configuration> kernel_of_rho_poly(const IntPolynomial& p, const CriticalGroup& g);
std::vector<Configuration> kernel_of_rho_poly(const IntPolynomial& p, const WheelParams& ambient,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

struct KernelCount {
    BigInt kernel_size;
    BigInt expected;
    bool matches() const { return kernel_size == expected; }
};

/// |Ker Cyc_d(rho)| in K(W_d(q,t)) against WCyc_d(q,t).
KernelCount verify_wcyc_kernel(unsigned d, std::int64_t q, std::int64_t t,
                               std::uint64_t budget = kDefaultEnumerationBudget);

struct QuadraticReport {
    bool holds = true;
    std::size_t checked = 0;
    std::optional<Configuration> witness;  // first failure
};

/// Checks rho^2 - (1+q+t) rho + q = 0 on every element.
QuadraticReport verify_quadratic(const CriticalGroup& g);
QuadraticReport verify_quadratic(const WheelParams& params, std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace wheelzeta
