#pragma once

#include "wheelzeta/bivariate.hpp"
#include "wheelzeta/matrix.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wheelzeta {

/// Parameters of the (q,t)-wheel: k rim vertices, q clockwise edges between
/// consecutive rim vertices, t bidirected spokes per rim vertex.
struct WheelParams {
    unsigned k = 1;
    std::int64_t q = 0;
    std::int64_t t = 1;

    /// Throws InvalidArgument unless k >= 1, q >= 0, t >= 1.
    void validate() const;
    std::string to_string() const;

    auto operator<=>(const WheelParams&) const = default;
};

/// The multidigraph W_k(q,t). Vertex 0 is the hub, 1..k the rim clockwise.
/// For k = 1 the rim edges are loops and are not stored; for k = 2 the
/// clockwise and counter-clockwise edges merge to multiplicity q+1.
class WheelGraph {
public:
    explicit WheelGraph(const WheelParams& params);

    const WheelParams& params() const noexcept { return params_; }
    std::size_t vertex_count() const noexcept { return params_.k + 1; }

    /// d(v_i, v_j): number of edges from v_i to v_j.
    std::int64_t multiplicity(std::size_t from, std::size_t to) const;
    /// Out-degree without loops (the Laplacian diagonal).
    std::int64_t out_degree(std::size_t v) const;
    /// Chips a rim vertex needs before it may fire: 1+q+t at every k,
    /// counting the rim loops of the degenerate k = 1 wheel.
    std::int64_t rim_firing_threshold() const noexcept { return 1 + params_.q + params_.t; }

    /// Full Laplacian, hub in row/column 0; every row sums to zero.
    IntMatrix laplacian() const;
    /// Laplacian with the hub row and column deleted.
    IntMatrix reduced_laplacian() const;

private:
    WheelParams params_;
    std::vector<std::int64_t> adj_;
};

WheelGraph build_wheel(const WheelParams& params);

IntMatrix reduced_laplacian(const WheelParams& params);

/// Reduced Laplacian with q and t kept as formal variables.
PolyMatrix reduced_laplacian_symbolic(unsigned k);

/// W_k(q,t) = det of the symbolic reduced Laplacian. Memoized.
BivariatePolynomial wheel_poly(unsigned k);

inline constexpr unsigned kDefaultTreeBound = 12;

/// Sum over spanning trees rooted at the hub of q^dist * t^#spokes, by
/// enumerating rim-edge subsets (every proper subset is a union of
/// disjoint arcs) and every spoke position inside each arc.
BivariatePolynomial enumerate_weighted_trees(unsigned k, unsigned bound = kDefaultTreeBound);

/// Cyclotomic-style factor WCyc_d with W_k = prod_{d|k} WCyc_d.
BivariatePolynomial wcyc(unsigned d);

} // namespace wheelzeta
