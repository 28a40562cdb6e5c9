#pragma once

#include "wheelzeta/bigint.hpp"
#include "wheelzeta/bivariate.hpp"
#include "wheelzeta/errors.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace wheelzeta {

/// Dense univariate polynomial over an exact ring R (BigInt or
/// BivariatePolynomial), coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the top coefficient is nonzero.
template <typename R>
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    UnivariatePolynomial(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }
    explicit UnivariatePolynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    /// Integer constant, so generic code can write R(0) and R(1).
    explicit UnivariatePolynomial(int c) : coeffs_{R(c)} { trim(); }

    static UnivariatePolynomial constant(R c) { return UnivariatePolynomial(std::vector<R>{std::move(c)}); }

    /// c * x^n
    static UnivariatePolynomial monomial(R c, std::size_t n) {
        std::vector<R> v(n + 1, R(0));
        v[n] = std::move(c);
        return UnivariatePolynomial(std::move(v));
    }

    const std::vector<R>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }

    friend UnivariatePolynomial operator-(const UnivariatePolynomial& a) {
        std::vector<R> v;
        v.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) v.push_back(R(0) - c);
        return UnivariatePolynomial(std::move(v));
    }

    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (::wheelzeta::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UnivariatePolynomial(std::move(v));
    }

    UnivariatePolynomial& operator*=(const UnivariatePolynomial& o) { return *this = *this * o; }

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

    /// Maps every coefficient through f (e.g. numeric evaluation or N1 -> -t).
    template <typename F>
    auto map_coefficients(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
        std::vector<Out> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(f(c));
        return UnivariatePolynomial<Out>(std::move(v));
    }

    /// Horner evaluation at x.
    R eval(const R& x) const {
        R acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && ::wheelzeta::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

template <typename R>
bool is_zero(const UnivariatePolynomial<R>& p) {
    return p.is_zero();
}

/// Exact quotient; the divisor's leading coefficient must divide every
/// intermediate leading coefficient, and the remainder must vanish.
template <typename R>
UnivariatePolynomial<R> exact_div(const UnivariatePolynomial<R>& a, const UnivariatePolynomial<R>& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    std::vector<R> rem = a.coefficients();
    const long db = b.degree();
    const R& lead = b.coefficients().back();
    if (a.degree() < db) {
        if (a.is_zero()) return {};
        throw DivisionError("non-exact univariate division", "degree(a) < degree(b)");
    }
    std::vector<R> quot(static_cast<std::size_t>(a.degree() - db + 1), R(0));
    for (long i = a.degree(); i >= db; --i) {
        const auto iu = static_cast<std::size_t>(i);
        if (is_zero(rem[iu])) continue;
        R c = exact_div(rem[iu], lead);
        const auto shift = static_cast<std::size_t>(i - db);
        for (std::size_t j = 0; j <= static_cast<std::size_t>(db); ++j) rem[shift + j] -= c * b.coefficients()[j];
        quot[shift] = std::move(c);
    }
    for (const auto& r : rem) {
        if (!is_zero(r)) throw DivisionError("non-exact univariate division", "nonzero remainder");
    }
    return UnivariatePolynomial<R>(std::move(quot));
}

using IntPolynomial = UnivariatePolynomial<BigInt>;
/// Polynomial in T whose coefficients live in Z[q,t].
using TPolynomial = UnivariatePolynomial<BivariatePolynomial>;

std::string to_string(const IntPolynomial& p, char var = 'x');

/// d-th cyclotomic polynomial; memoized, d >= 1.
IntPolynomial cyclotomic(unsigned d);

/// Positive divisors of n in increasing order.
std::vector<unsigned> divisors(unsigned n);

} // namespace wheelzeta
