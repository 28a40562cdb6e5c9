#include "wheelzeta/ecnum.hpp"

#include "wheelzeta/errors.hpp"
#include "wheelzeta/univariate.hpp"

#include <map>
#include <mutex>

namespace wheelzeta {

namespace {

using P = BivariatePolynomial;

P trace_poly() { return P(1) + P::q() - P::t(); }

} // namespace

bool alternates_in_sign(const BivariatePolynomial& p) {
    for (const auto& [e, c] : p.terms()) {
        const int want = e.t % 2 == 1 ? 1 : -1;
        if (sgn(c) != want) return false;
    }
    return true;
}

BivariatePolynomial nk_poly(unsigned k) {
    if (k < 1) throw InvalidArgument("N_k needs k >= 1");
    const P a = trace_poly();
    P prev = P(2), cur = a;
    for (unsigned i = 2; i <= k; ++i) {
        P next = a * cur - P::q() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    P nk = P::q().pow(k) + P(1) - cur;
    if (!alternates_in_sign(nk)) throw InternalError("N_" + std::to_string(k) + " does not alternate in sign");
    return nk;
}

PolyMatrix mk_symbolic(unsigned k) {
    if (k < 1) throw InvalidArgument("M_k needs k >= 1");
    if (k == 1) return PolyMatrix{{-P::t()}};
    if (k == 2) return PolyMatrix{{trace_poly(), P(-1) - P::q()}, {P(-1) - P::q(), trace_poly()}};
    PolyMatrix m(k, k);
    for (unsigned i = 0; i < k; ++i) {
        m(i, i) = trace_poly();
        m(i, (i + 1) % k) = -P::q();
        m(i, (i + k - 1) % k) = P(-1);
    }
    return m;
}

IntMatrix mk_numeric(unsigned k, const BigInt& q, const BigInt& n1) { return evaluate(mk_symbolic(k), q, n1); }

BivariatePolynomial nk_via_detmk(unsigned k) { return -det_poly(mk_symbolic(k)); }

BivariatePolynomial ecyc(unsigned d) {
    if (d < 1) throw InvalidArgument("ECyc_d needs d >= 1");
    static std::mutex mu;
    static std::map<unsigned, P> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    P result = P::t();
    if (d > 1) {
        P denom(1);
        for (unsigned e : divisors(d))
            if (e < d) denom *= ecyc(e);
        try {
            result = exact_div(nk_poly(d), denom);
        } catch (const DivisionError&) {
            throw InternalError("N_" + std::to_string(d) + " is not divisible by its lower factors");
        }
    }
    std::lock_guard lock(mu);
    cache.emplace(d, result);
    return result;
}

BigInt nk_value(const BigInt& q, const BigInt& n1, unsigned k) {
    if (k < 1) throw InvalidArgument("N_k needs k >= 1");
    const BigInt a = 1 + q - n1;
    BigInt prev = 2, cur = a, qk = q;
    for (unsigned i = 2; i <= k; ++i) {
        BigInt next = a * cur - q * prev;
        prev = cur;
        cur = next;
        qk *= q;
    }
    return qk + 1 - cur;
}

RationalSeries elliptic_zeta() {
    TPolynomial num{P(1), -trace_poly(), P::q()};
    TPolynomial den = TPolynomial{P(1), P(-1)} * TPolynomial{P(1), -P::q()};
    return {num, den};
}

} // namespace wheelzeta
