#include "wheelzeta/wheel.hpp"

#include "wheelzeta/errors.hpp"
#include "wheelzeta/univariate.hpp"

#include <map>
#include <mutex>

namespace wheelzeta {

void WheelParams::validate() const {
    if (k < 1) throw InvalidArgument("wheel needs k >= 1 rim vertices");
    if (t < 1) throw InvalidArgument("wheel needs t >= 1 spokes per rim vertex");
    if (q < 0) throw InvalidArgument("wheel needs q >= 0");
}

std::string WheelParams::to_string() const {
    return "W_" + std::to_string(k) + "(q=" + std::to_string(q) + ",t=" + std::to_string(t) + ")";
}

WheelGraph::WheelGraph(const WheelParams& params) : params_(params) {
    params_.validate();
    const std::size_t n = vertex_count();
    adj_.assign(n * n, 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return adj_[i * n + j]; };
    const unsigned k = params_.k;
    for (unsigned i = 1; i <= k; ++i) {
        at(0, i) = params_.t;
        at(i, 0) = params_.t;
        const unsigned next = i % k + 1;
        const unsigned prev = (i + k - 2) % k + 1;
        if (next != i) at(i, next) += params_.q;
        if (prev != i) at(i, prev) += 1;
    }
}

std::int64_t WheelGraph::multiplicity(std::size_t from, std::size_t to) const {
    const std::size_t n = vertex_count();
    if (from >= n || to >= n) throw InvalidArgument("vertex index out of range");
    return adj_[from * n + to];
}

std::int64_t WheelGraph::out_degree(std::size_t v) const {
    std::int64_t d = 0;
    for (std::size_t j = 0; j < vertex_count(); ++j) d += multiplicity(v, j);
    return d;
}

IntMatrix WheelGraph::laplacian() const {
    const std::size_t n = vertex_count();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? out_degree(i) : -multiplicity(i, j);
    }
    return m;
}

IntMatrix WheelGraph::reduced_laplacian() const {
    const IntMatrix full = laplacian();
    const std::size_t k = params_.k;
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = full(i + 1, j + 1);
    return m;
}

WheelGraph build_wheel(const WheelParams& params) { return WheelGraph(params); }

IntMatrix reduced_laplacian(const WheelParams& params) { return WheelGraph(params).reduced_laplacian(); }

PolyMatrix reduced_laplacian_symbolic(unsigned k) {
    if (k < 1) throw InvalidArgument("wheel needs k >= 1 rim vertices");
    const auto q = BivariatePolynomial::q();
    const auto t = BivariatePolynomial::t();
    PolyMatrix m(k, k);
    for (unsigned i = 0; i < k; ++i) {
        m(i, i) = t;
        const unsigned next = (i + 1) % k;
        const unsigned prev = (i + k - 1) % k;
        if (next != i) {
            m(i, next) -= q;
            m(i, i) += q;
        }
        if (prev != i) {
            m(i, prev) -= BivariatePolynomial(1);
            m(i, i) += BivariatePolynomial(1);
        }
    }
    return m;
}

BivariatePolynomial wheel_poly(unsigned k) {
    static std::mutex mu;
    static std::map<unsigned, BivariatePolynomial> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    BivariatePolynomial w = det_poly(reduced_laplacian_symbolic(k));
    std::lock_guard lock(mu);
    cache.emplace(k, w);
    return w;
}

BivariatePolynomial enumerate_weighted_trees(unsigned k, unsigned bound) {
    if (k < 1) throw InvalidArgument("wheel needs k >= 1 rim vertices");
    if (k > bound) {
        throw ResourceLimit("tree enumeration for k=" + std::to_string(k) + " exceeds bound " + std::to_string(bound));
    }
    // Rim edge i joins v_{i-1} and v_i (0-based, cyclic). For k = 1 the single
    // rim edge is a loop, so only the empty subset contributes.
    const auto q = BivariatePolynomial::q();
    const auto t = BivariatePolynomial::t();
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    BivariatePolynomial total;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
        // Start from a vertex whose incoming edge is absent; it begins an arc.
        unsigned start = 0;
        while (mask >> start & 1U) ++start;
        BivariatePolynomial weight(1);
        unsigned v = start;
        for (unsigned seen = 0; seen < k;) {
            unsigned len = 1;
            while (len < k && (mask >> ((v + len) % k) & 1U)) ++len;
            // Spoke at arc position j leaves len-1-j edges clockwise of it.
            BivariatePolynomial arc;
            for (unsigned j = 0; j < len; ++j) arc += q.pow(len - 1 - j) * t;
            weight *= arc;
            seen += len;
            v = (v + len) % k;
        }
        total += weight;
    }
    return total;
}

BivariatePolynomial wcyc(unsigned d) {
    if (d < 1) throw InvalidArgument("WCyc index must be >= 1");
    if (d == 1) return BivariatePolynomial::t();
    BivariatePolynomial lower(1);
    for (unsigned e : divisors(d)) {
        if (e < d) lower *= wcyc(e);
    }
    try {
        return exact_div(wheel_poly(d), lower);
    } catch (const DivisionError& e) {
        throw InternalError("W_" + std::to_string(d) + " is not divisible by its lower WCyc factors: " + e.what());
    }
}

} // namespace wheelzeta
