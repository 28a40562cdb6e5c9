#include "wheelzeta/series.hpp"

#include "wheelzeta/errors.hpp"

namespace wheelzeta {

std::vector<BivariatePolynomial> series_expand(const RationalSeries& r, unsigned order) {
    const BivariatePolynomial d0 = r.denominator.coeff(0);
    if (d0.is_zero()) throw SingularSeries("denominator has zero constant term");
    const long dd = r.denominator.degree();
    std::vector<BivariatePolynomial> s;
    s.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        BivariatePolynomial acc = r.numerator.coeff(n);
        for (long j = 1; j <= dd && j <= static_cast<long>(n); ++j) {
            acc -= r.denominator.coeff(static_cast<std::size_t>(j)) * s[n - static_cast<unsigned>(j)];
        }
        s.push_back(exact_div(acc, d0));
    }
    return s;
}

std::vector<BivariatePolynomial> log_series_counts(const RationalSeries& r, unsigned order) {
    if (r.denominator.coeff(0).is_zero()) throw InvalidArgument("series must satisfy r(0) = 1");
    const auto s = series_expand(r, order);
    if (s[0] != BivariatePolynomial(1)) throw InvalidArgument("series must satisfy r(0) = 1, got " + s[0].to_string());
    // From T r'(T) = r(T) * sum a_k T^k: k s_k = sum_{j=1..k} a_j s_{k-j}.
    std::vector<BivariatePolynomial> a(order + 1);
    for (unsigned k = 1; k <= order; ++k) {
        BivariatePolynomial acc = BivariatePolynomial(static_cast<long>(k)) * s[k];
        for (unsigned j = 1; j < k; ++j) acc -= a[j] * s[k - j];
        a[k] = std::move(acc);
    }
    a.erase(a.begin());
    return a;
}

std::vector<BivariatePolynomial> exp_from_counts(const std::vector<BivariatePolynomial>& counts, unsigned order) {
    if (counts.size() < order) throw InvalidArgument("not enough counts for the requested order");
    std::vector<BivariatePolynomial> s{BivariatePolynomial(1)};
    for (unsigned k = 1; k <= order; ++k) {
        BivariatePolynomial acc;
        for (unsigned j = 1; j <= k; ++j) acc += counts[j - 1] * s[k - j];
        try {
            s.push_back(exact_div(acc, BivariatePolynomial(static_cast<long>(k))));
        } catch (const DivisionError& e) {
            throw InternalError("exp of counts is not integral at T^" + std::to_string(k) + ": " + e.what());
        }
    }
    return s;
}

} // namespace wheelzeta
