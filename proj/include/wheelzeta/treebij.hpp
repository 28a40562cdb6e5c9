#pragma once

#include "wheelzeta/chipfire.hpp"

#include <cstdint>
#include <vector>

namespace wheelzeta {

struct Spoke {
    std::size_t vertex = 1;  // rim vertex 1..k
    std::int64_t label = 0;  // in [1+q, q+t]

    friend bool operator==(const Spoke&, const Spoke&) = default;
    friend auto operator<=>(const Spoke&, const Spoke&) = default;
};

/// Rim edge between v_{to-1} and v_to (indices cyclic, 1-based).
struct Arc {
    std::size_t to = 1;
    std::int64_t label = 0;  // in [1, q]

    std::size_t from(unsigned k) const noexcept { return to == 1 ? k : to - 1; }

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Labeled spanning tree of W_k(q,t) rooted at the hub. The rim edges form
/// disjoint arcs, each carrying exactly one spoke. Spokes and arcs are
/// sorted by vertex / edge index.
struct SpanningTree {
    WheelParams params;
    std::vector<Spoke> spokes;
    std::vector<Arc> arcs;

    std::size_t spoke_count() const noexcept { return spokes.size(); }

    friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
    friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

/// Structural validity plus label ranges.
bool is_valid_tree(const SpanningTree& tr);

/// Number of rim edges lying clockwise of the spoke within their arc. The
/// weight monomial of the unlabeled skeleton is q^dist * t^#spokes.
unsigned tree_dist(const SpanningTree& tr);

/// Critical configuration to labeled tree. Requires q >= 1.
SpanningTree config_to_tree(const Configuration& c);

/// Inverse of config_to_tree.
Configuration tree_to_config(const SpanningTree& tr);

} // namespace wheelzeta
