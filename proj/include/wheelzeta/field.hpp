#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wheelzeta {

/// F_{p^n} as F_p[x] / (f) for the first monic irreducible f of degree n in
/// lexicographic order. Elements are encoded as integers 0..p^n-1 whose
/// base-p digits are the coefficients, constant term first; so the prime
/// field F_p is {0..p-1}.
class FiniteField {
public:
    using Elem = std::uint32_t;

    static constexpr std::uint32_t kMaxPrime = 13;
    static constexpr unsigned kMaxDegree = 4;

    /// p prime in [5, 13], 1 <= n <= 4.
    FiniteField(std::uint32_t p, unsigned n);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return n_; }
    std::uint32_t size() const noexcept { return size_; }
    /// Coefficients of the monic modulus, constant term first.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Elem from_int(std::int64_t v) const;
    Elem from_coefficients(const std::vector<std::int64_t>& coeffs) const;
    std::vector<std::uint32_t> coefficients(Elem a) const;
    bool in_prime_field(Elem a) const noexcept { return a < p_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// Throws InvalidArgument for 0.
    Elem inv(Elem a) const;
    /// a^p.
    Elem frobenius(Elem a) const { return pow(a, p_); }
    /// Some square root of a, or -1 if a is a non-square.
    std::int64_t sqrt(Elem a) const { return sqrt_[a]; }

    std::string to_string(Elem a) const;

private:
    std::uint32_t p_;
    unsigned n_;
    std::uint32_t size_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::int64_t> sqrt_;
};

bool is_prime(std::uint64_t n);

/// Monic irreducible polynomials of the given degree over F_p,
/// ordered by their integer encoding.
std::vector<std::vector<std::uint32_t>> monic_irreducibles(std::uint32_t p, unsigned degree);

} // namespace wheelzeta
