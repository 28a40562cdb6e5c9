#pragma once

#include "wheelzeta/bivariate.hpp"
#include "wheelzeta/univariate.hpp"

#include <vector>

namespace wheelzeta {

/// numerator / denominator as a formal power series in T over Z[q,t].
struct RationalSeries {
    TPolynomial numerator;
    TPolynomial denominator;

    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
        return {a.numerator * b.numerator, a.denominator * b.denominator};
    }

    /// Equality as rational functions (cross multiplication).
    bool equivalent(const RationalSeries& o) const {
        return numerator * o.denominator == o.numerator * denominator;
    }

    RationalSeries reciprocal() const { return {denominator, numerator}; }
};

/// Coefficients of T^0..T^order. Throws SingularSeries if the denominator's
/// constant term is zero and DivisionError if it does not divide exactly.
std::vector<BivariatePolynomial> series_expand(const RationalSeries& r, unsigned order);

/// The counts a_1..a_order with log r = sum a_k T^k / k. Requires r(0) = 1.
std::vector<BivariatePolynomial> log_series_counts(const RationalSeries& r, unsigned order);

/// Inverse of log_series_counts: coefficients s_0..s_order of
/// exp(sum a_k T^k / k). Throws InternalError if some s_k is not integral.
std::vector<BivariatePolynomial> exp_from_counts(const std::vector<BivariatePolynomial>& counts, unsigned order);

} // namespace wheelzeta
