#include "wheelzeta/shiftfrob.hpp"

#include "wheelzeta/errors.hpp"
#include "wheelzeta/wheel.hpp"

#include <algorithm>

namespace wheelzeta {

Configuration rotate(const Configuration& c, long j) {
    const long k = static_cast<long>(c.chips.size());
    if (k == 0) return c;
    const long s = ((j % k) + k) % k;
    Configuration out = c;
    std::rotate(out.chips.begin(), out.chips.begin() + s, out.chips.end());
    return out;
}

Configuration embed(const Configuration& c, unsigned k2) {
    const unsigned k = c.params.k;
    if (k2 == 0 || k2 % k != 0) throw InvalidArgument("cannot embed W_" + std::to_string(k) + " into W_" + std::to_string(k2));
    Configuration out{WheelParams{k2, c.params.q, c.params.t}, {}};
    out.chips.reserve(k2);
    for (unsigned r = 0; r < k2 / k; ++r) out.chips.insert(out.chips.end(), c.chips.begin(), c.chips.end());
    return out;
}

Configuration apply_rho_poly(const IntPolynomial& p, const Configuration& c) {
    Chips acc(c.chips.size(), 0);
    const auto& coeffs = p.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (is_zero(coeffs[j])) continue;
        const std::int64_t a = to_int64(coeffs[j]);
        const Configuration r = rotate(c, static_cast<long>(j));
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a * r.chips[i];
    }
    return class_representative(c.params, acc);
}

std::vector<Configuration> kernel_of_rho_poly(const IntPolynomial& p, const CriticalGroup& g) {
    std::vector<Configuration> out;
    for (const auto& c : g.elements)
        if (apply_rho_poly(p, c) == g.identity) out.push_back(c);
    return out;
}

std::vector<Configuration> kernel_of_rho_poly(const IntPolynomial& p, const WheelParams& ambient, std::uint64_t budget) {
    return kernel_of_rho_poly(p, enumerate_criticals(ambient, budget));
}

KernelCount verify_wcyc_kernel(unsigned d, std::int64_t q, std::int64_t t, std::uint64_t budget) {
    const WheelParams params{d, q, t};
    params.validate();
    const auto kernel = kernel_of_rho_poly(cyclotomic(d), params, budget);
    return {BigInt(static_cast<unsigned long>(kernel.size())), wcyc(d).eval(q, t)};
}

QuadraticReport verify_quadratic(const CriticalGroup& g) {
    const std::int64_t q = g.params.q, t = g.params.t;
    const IntPolynomial rel{BigInt(q), BigInt(-(1 + q + t)), BigInt(1)};
    QuadraticReport rep;
    for (const auto& c : g.elements) {
        ++rep.checked;
        if (apply_rho_poly(rel, c) != g.identity) {
            rep.holds = false;
            rep.witness = c;
            break;
        }
    }
    return rep;
}

QuadraticReport verify_quadratic(const WheelParams& params, std::uint64_t budget) {
    return verify_quadratic(enumerate_criticals(params, budget));
}

} // namespace wheelzeta
