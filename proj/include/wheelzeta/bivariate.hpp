#pragma once

#include "wheelzeta/bigint.hpp"

#include <compare>
#include <map>
#include <string>

namespace wheelzeta {

/// Exponent pair of a monomial q^q * y^t. The second variable reads as t or
/// N1 depending on context.
struct Exponent {
    unsigned q = 0;
    unsigned t = 0;

    auto operator<=>(const Exponent&) const = default;
};

/// Sparse integer polynomial in two variables. Terms are kept sorted by
/// (e_q, e_t) with no zero coefficients, so equality is structural.
class BivariatePolynomial {
public:
    using TermMap = std::map<Exponent, BigInt>;

    BivariatePolynomial() = default;
    BivariatePolynomial(const BigInt& c);   // NOLINT(implicit)
    BivariatePolynomial(long c);            // NOLINT(implicit)

    static BivariatePolynomial monomial(const BigInt& c, unsigned eq, unsigned et);
    static BivariatePolynomial q() { return monomial(1, 1, 0); }
    static BivariatePolynomial t() { return monomial(1, 0, 1); }
    /// Builds from an arbitrary term map, dropping zero coefficients.
    static BivariatePolynomial from_terms(TermMap terms);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coefficient(unsigned eq, unsigned et) const;
    unsigned degree_q() const;
    unsigned degree_t() const;

    BigInt eval(const BigInt& q, const BigInt& t) const;

    /// p(q, y) -> p(q, -y).
    BivariatePolynomial negate_second() const;
    BivariatePolynomial pow(unsigned n) const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const BivariatePolynomial& o);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator-(const BivariatePolynomial& a);
    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

    /// Human-readable form, highest t-degree first, e.g. "t^2 + 2*q*t + 2*t".
    std::string to_string(char second = 't') const;

private:
    void add_term(const Exponent& e, const BigInt& c);

    TermMap terms_;
};

inline bool is_zero(const BivariatePolynomial& p) { return p.is_zero(); }

/// Exact quotient a / b in Z[q,t]. Throws DivisionError carrying the
/// remainder reached when the lex leading term stops dividing.
BivariatePolynomial exact_div(const BivariatePolynomial& a, const BivariatePolynomial& b);

} // namespace wheelzeta
