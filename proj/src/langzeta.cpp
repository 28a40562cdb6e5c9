#include "wheelzeta/langzeta.hpp"

#include "wheelzeta/ecnum.hpp"
#include "wheelzeta/errors.hpp"

namespace wheelzeta {

namespace {

using P = BivariatePolynomial;

void check_params(std::int64_t q, std::int64_t t) {
    if (q < 1) throw Unsupported("the automaton needs q >= 1");
    if (t < 1) throw InvalidArgument("the automaton needs t >= 1");
}

} // namespace

AutomatonMG::AutomatonMG(std::int64_t q_, std::int64_t t_) : q(q_), t(t_) { check_params(q, t); }

int AutomatonMG::step(int s, std::int64_t letter) const {
    if (letter < 0 || letter > q + t) throw InvalidArgument("letter " + std::to_string(letter) + " out of range");
    if (letter > q) return A;
    if (s == C) return letter == q ? C : -1;
    return letter == 0 ? C : B;
}

IntMatrix AutomatonMG::transfer_matrix() const {
    IntMatrix m(3, 3);
    for (int s = 0; s < 3; ++s)
        for (std::int64_t l = 0; l <= q + t; ++l) {
            const int to = step(s, l);
            if (to >= 0) m(s, to) += 1;
        }
    return m;
}

PolyMatrix AutomatonMG::transfer_matrix_symbolic() {
    const P t = P::t(), q = P::q();
    return PolyMatrix{{t, q, P(1)}, {t, q, P(1)}, {t, P(0), P(1)}};
}

bool mg_accepts(const std::vector<std::int64_t>& word, std::int64_t q, std::int64_t t) {
    const AutomatonMG m(q, t);
    for (auto l : word)
        if (l < 0 || l > q + t) throw InvalidArgument("letter " + std::to_string(l) + " out of range");
    if (word.empty()) return false;
    // Try every start state; the machine is deterministic given the state.
    for (int start = 0; start < 3; ++start) {
        int s = start;
        bool seen_a = false;
        for (auto l : word) {
            s = m.step(s, l);
            if (s < 0) break;
            if (s == AutomatonMG::A) seen_a = true;
        }
        if (s == start && seen_a) return true;
    }
    return false;
}

BigInt word_count(unsigned k, std::int64_t q, std::int64_t t) {
    if (k < 1) throw InvalidArgument("word length must be >= 1");
    const IntMatrix mk = matrix_power(AutomatonMG(q, t).transfer_matrix(), k);
    BigInt qk = 1;
    for (unsigned i = 0; i < k; ++i) qk *= q;
    return mk(0, 0) + mk(1, 1) + mk(2, 2) - qk - 1;
}

BivariatePolynomial word_count_symbolic(unsigned k) {
    if (k < 1) throw InvalidArgument("word length must be >= 1");
    const PolyMatrix mk = matrix_power(AutomatonMG::transfer_matrix_symbolic(), k);
    return mk(0, 0) + mk(1, 1) + mk(2, 2) - P::q().pow(k) - P(1);
}

std::uint64_t word_count_scan(unsigned k, std::int64_t q, std::int64_t t, std::uint64_t budget) {
    check_params(q, t);
    const auto base = static_cast<std::uint64_t>(q + t + 1);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) {
        total *= base;
        if (total > budget) throw ResourceLimit("word scan exceeds budget " + std::to_string(budget));
    }
    std::vector<std::int64_t> w(k, 0);
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n < total; ++n) {
        if (mg_accepts(w, q, t)) ++count;
        for (std::size_t i = 0; i < k; ++i) {
            if (++w[i] < static_cast<std::int64_t>(base)) break;
            w[i] = 0;
        }
    }
    return count;
}

RationalSeries zeta_language() {
    const TPolynomial num = TPolynomial{P(1), -P::q()} * TPolynomial{P(1), P(-1)};
    const TPolynomial den{P(1), -(P(1) + P::q() + P::t()), P::q()};
    return {num, den};
}

RationalSeries zeta_language_detform() {
    const PolyMatrix m = AutomatonMG::transfer_matrix_symbolic();
    Matrix<TPolynomial> a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = TPolynomial{i == j ? P(1) : P(0), -m(i, j)};
    const TPolynomial den = det_cofactor(a);
    const TPolynomial num = TPolynomial{P(1), -P::q()} * TPolynomial{P(1), P(-1)};
    return {num, den};
}

NumericZeta zeta_language_numeric(std::int64_t q, std::int64_t t, unsigned series_order) {
    check_params(q, t);
    const RationalSeries z = zeta_language();
    auto at = [&](const TPolynomial& p) {
        std::vector<BigInt> v;
        for (const auto& c : p.coefficients()) v.push_back(c.eval(q, t));
        return v;
    };
    NumericZeta out{at(z.numerator), at(z.denominator), {}};
    for (const auto& c : series_expand(z, series_order)) out.series.push_back(c.eval(q, t));
    return out;
}

bool reciprocity_holds() {
    const RationalSeries ez = elliptic_zeta();
    auto sub = [](const TPolynomial& p) { return p.map_coefficients([](const P& c) { return c.negate_second(); }); };
    const RationalSeries ez_sub{sub(ez.numerator), sub(ez.denominator)};
    const RationalSeries product = zeta_language() * ez_sub;
    return product.equivalent(RationalSeries{TPolynomial{P(1)}, TPolynomial{P(1)}});
}

} // namespace wheelzeta
