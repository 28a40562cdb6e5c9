#include "wheelzeta/bivariate.hpp"

#include "wheelzeta/errors.hpp"

#include <algorithm>
#include <vector>

namespace wheelzeta {

namespace {

BigInt ipow(const BigInt& base, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Lex order with t major: the leading term has the largest (e_t, e_q).
std::pair<Exponent, BigInt> leading_term(const BivariatePolynomial::TermMap& terms) {
    auto best = terms.begin();
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (std::tie(it->first.t, it->first.q) > std::tie(best->first.t, best->first.q)) best = it;
    }
    return *best;
}

} // namespace

BivariatePolynomial::BivariatePolynomial(const BigInt& c) {
    if (sgn(c) != 0) terms_.emplace(Exponent{0, 0}, c);
}

BivariatePolynomial::BivariatePolynomial(long c) : BivariatePolynomial(BigInt(c)) {}

BivariatePolynomial BivariatePolynomial::monomial(const BigInt& c, unsigned eq, unsigned et) {
    BivariatePolynomial p;
    if (sgn(c) != 0) p.terms_.emplace(Exponent{eq, et}, c);
    return p;
}

BivariatePolynomial BivariatePolynomial::from_terms(TermMap terms) {
    std::erase_if(terms, [](const auto& kv) { return sgn(kv.second) == 0; });
    BivariatePolynomial p;
    p.terms_ = std::move(terms);
    return p;
}

BigInt BivariatePolynomial::coefficient(unsigned eq, unsigned et) const {
    auto it = terms_.find(Exponent{eq, et});
    return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned BivariatePolynomial::degree_q() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.q);
    return d;
}

unsigned BivariatePolynomial::degree_t() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
}

BigInt BivariatePolynomial::eval(const BigInt& q, const BigInt& t) const {
    BigInt acc = 0;
    for (const auto& [e, c] : terms_) acc += c * ipow(q, e.q) * ipow(t, e.t);
    return acc;
}

BivariatePolynomial BivariatePolynomial::negate_second() const {
    BivariatePolynomial p = *this;
    for (auto& [e, c] : p.terms_) {
        if (e.t % 2 == 1) c = -c;
    }
    return p;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned n) const {
    BivariatePolynomial acc(1);
    for (unsigned i = 0; i < n; ++i) acc *= *this;
    return acc;
}

void BivariatePolynomial::add_term(const Exponent& e, const BigInt& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, BigInt(-c));
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o) {
    return *this = *this * o;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial::TermMap out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out[Exponent{ea.q + eb.q, ea.t + eb.t}] += ca * cb;
    }
    return BivariatePolynomial::from_terms(std::move(out));
}

BivariatePolynomial operator-(const BivariatePolynomial& a) {
    BivariatePolynomial p = a;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

std::string BivariatePolynomial::to_string(char second) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, BigInt>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first.t, a.first.q) > std::tie(b.first.t, b.first.q);
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        auto append = [&](char var, unsigned p) {
            if (p == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var;
            if (p > 1) mono += "^" + std::to_string(p);
        };
        append('q', e.q);
        append(second, e.t);
        if (mono.empty()) {
            out += to_decimal(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_decimal(mag) + "*" + mono;
        }
    }
    return out;
}

BivariatePolynomial exact_div(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    const auto [lead_e, lead_c] = leading_term(b.terms());
    BivariatePolynomial quotient;
    BivariatePolynomial rem = a;
    while (!rem.is_zero()) {
        const auto [re, rc] = leading_term(rem.terms());
        if (re.t < lead_e.t || re.q < lead_e.q || sgn(BigInt(rc % lead_c)) != 0) {
            throw DivisionError("polynomial division leaves remainder " + rem.to_string(), rem.to_string());
        }
        BivariatePolynomial m = BivariatePolynomial::monomial(BigInt(rc / lead_c), re.q - lead_e.q, re.t - lead_e.t);
        quotient += m;
        rem -= m * b;
    }
    return quotient;
}

} // namespace wheelzeta
