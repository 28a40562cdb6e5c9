#include "wheelzeta/structure.hpp"

#include "wheelzeta/errors.hpp"

#include <map>
#include <mutex>

namespace wheelzeta {

namespace {

using P = BivariatePolynomial;

P delta_poly() { return P(1) + P::q() + P::t(); }

} // namespace

BivariatePolynomial fhat(int index) {
    if (index < -2 || index % 2 != 0) throw InvalidArgument("F^ index must be even and >= -2, got " + std::to_string(index));
    static std::mutex mu;
    static std::vector<P> cache{P(0), P(1)};  // indices -2, 0
    std::lock_guard lock(mu);
    const std::size_t slot = static_cast<std::size_t>(index / 2 + 1);
    while (cache.size() <= slot) {
        const std::size_t n = cache.size();
        cache.push_back(delta_poly() * cache[n - 1] - P::q() * cache[n - 2]);
    }
    return cache[slot];
}

BivariatePolynomial fhat_subsets(int index) {
    if (index < -2 || index % 2 != 0) throw InvalidArgument("F^ index must be even and >= -2");
    if (index < 0) return P(0);
    const unsigned n = static_cast<unsigned>(index);
    const unsigned half = n / 2;
    P::TermMap terms;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (s & (s >> 1)) continue;
        unsigned size = 0, even = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (!((s >> i) & 1)) continue;
            ++size;
            if ((i + 1) % 2 == 0) ++even;
        }
        if (size > half) continue;
        terms[Exponent{even, half - size}] += 1;
    }
    return P::from_terms(std::move(terms));
}

PolyMatrix matrix_power_fhat(unsigned m) {
    if (m < 1) throw InvalidArgument("matrix_power_fhat needs m >= 1");
    const PolyMatrix base{{delta_poly(), P(1)}, {-P::q(), P(0)}};
    PolyMatrix direct = matrix_power(base, m);
    const int n = static_cast<int>(m);
    const PolyMatrix formula{{fhat(2 * n), fhat(2 * n - 2)}, {-P::q() * fhat(2 * n - 2), -P::q() * fhat(2 * n - 4)}};
    if (direct != formula) throw InternalError("Fibonacci matrix power identity failed at m=" + std::to_string(m));
    return direct;
}

PolyMatrix gensmith_full_matrix(const GenSmithInput& in) {
    const unsigned k = in.k;
    if (k < 3) throw InvalidArgument("generalized Smith form needs k >= 3");
    if (in.abcd.rows() != 2 || in.abcd.cols() != 2 || in.wxyz.rows() != 2 || in.wxyz.cols() != 2)
        throw InvalidArgument("corner blocks must be 2x2");
    PolyMatrix m(k, k);
    for (unsigned c = 0; c + 2 < k; ++c) {
        m(c, c) += P(1);
        m(c + 1, c) -= in.delta;
        m(c + 2, c) += P::q();
    }
    for (unsigned j = 0; j < 2; ++j) {
        m(0, k - 2 + j) += in.abcd(0, j);
        m(1, k - 2 + j) += in.abcd(1, j);
        m(k - 2, k - 2 + j) += in.wxyz(0, j);
        m(k - 1, k - 2 + j) += in.wxyz(1, j);
    }
    return m;
}

PolyMatrix gensmith_reduce(const GenSmithInput& in) {
    if (in.k < 3) throw InvalidArgument("generalized Smith form needs k >= 3");
    const PolyMatrix base{{in.delta, P(1)}, {-P::q(), P(0)}};
    return matrix_power(base, in.k - 2) * in.abcd + in.wxyz;
}

GenSmithInput wheel_gensmith_input(unsigned k) {
    const P d = delta_poly();
    return {k, d, PolyMatrix{{P::q(), -d}, {P(0), P::q()}}, PolyMatrix{{P(1), P(0)}, {-d, P(1)}}};
}

GenSmithInput deformed_gensmith_input(unsigned k) {
    const P d = delta_poly();
    return {k + 1, d, PolyMatrix{{P::q(), P(-1) - P::q()}, {P(0), P::q()}}, PolyMatrix{{P(1), P(0)}, {-d, P(1)}}};
}

PolyMatrix wheel_two_by_two(unsigned k) {
    if (k < 3) throw InvalidArgument("two-generator presentation needs k >= 3");
    const int n = static_cast<int>(k);
    return PolyMatrix{{P::q() * fhat(2 * n - 4) + P(1), P::q() * fhat(2 * n - 2)},
                      {fhat(2 * n - 2), fhat(2 * n) - P(1)}};
}

PolyMatrix deformed_two_by_two(unsigned k) {
    if (k < 2) throw InvalidArgument("deformed presentation needs k >= 2");
    const int n = static_cast<int>(k);
    return PolyMatrix{{P::q() * fhat(2 * n - 2) + P(1), fhat(2 * n) - P::t() * fhat(2 * n - 2)},
                      {P::q() * fhat(2 * n), fhat(2 * n + 2) - P::t() * fhat(2 * n) - P(1)}};
}

namespace {

PolyMatrix add_delta_row_negate_col(PolyMatrix m) {
    const P d = delta_poly();
    for (unsigned c = 0; c < 2; ++c) m(1, c) += d * m(0, c);
    for (unsigned r = 0; r < 2; ++r) m(r, 1) = -m(r, 1);
    return m;
}

} // namespace

PolyMatrix normalize_wheel_reduction(const PolyMatrix& r) { return add_delta_row_negate_col(r).transpose(); }

PolyMatrix normalize_deformed_reduction(const PolyMatrix& r) { return add_delta_row_negate_col(r); }

SNFResult wheel_group_invariants(const WheelParams& params) { return smith_normal_form(reduced_laplacian(params)); }

IntMatrix deformed_reduced_laplacian(const WheelParams& params) {
    params.validate();
    IntMatrix m = reduced_laplacian(WheelParams{params.k + 1, params.q, params.t});
    m(0, 0) -= params.t;
    return m;
}

PolyMatrix deformed_reduced_laplacian_symbolic(unsigned k) {
    if (k < 1) throw InvalidArgument("deformed wheel needs k >= 1");
    PolyMatrix m = reduced_laplacian_symbolic(k + 1);
    m(0, 0) -= P::t();
    return m;
}

DeformedInvariants deformed_wheel_invariants(const WheelParams& params) {
    params.validate();
    DeformedInvariants out;
    out.snf = smith_normal_form(deformed_reduced_laplacian(params));
    BigInt qk = 0, pw = 1;
    for (unsigned i = 0; i <= params.k; ++i) {
        qk += pw;
        pw *= params.q;
    }
    out.predicted_d1 = big_gcd(BigInt(static_cast<long>(params.t)), qk);
    // Only the last two factors can exceed 1; d1 is the smaller of them.
    const auto& f = out.snf.invariant_factors;
    out.d1 = f.size() >= 2 ? f[f.size() - 2] : BigInt(1);
    return out;
}

} // namespace wheelzeta
