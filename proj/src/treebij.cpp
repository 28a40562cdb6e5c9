#include "wheelzeta/treebij.hpp"

#include "wheelzeta/errors.hpp"

#include <algorithm>

namespace wheelzeta {

namespace {

struct Layout {
    std::vector<bool> edge;                // edge[i]: rim edge into v_i (0-based i)
    std::vector<std::int64_t> edge_label;
    std::vector<std::int64_t> spoke_label;  // 0 when absent
};

// Fails with a message on structural problems; returns the component walk
// as (start, spoke, end) triples, all 0-based.
struct Component {
    std::size_t start, spoke, length;
};

std::vector<Component> components(const SpanningTree& tr, Layout& lay, std::string& why) {
    const std::size_t k = tr.params.k;
    lay.edge.assign(k, false);
    lay.edge_label.assign(k, 0);
    lay.spoke_label.assign(k, 0);
    for (const auto& s : tr.spokes) {
        if (s.vertex < 1 || s.vertex > k) {
            why = "spoke vertex out of range";
            return {};
        }
        if (lay.spoke_label[s.vertex - 1] != 0) {
            why = "two spokes at one vertex";
            return {};
        }
        lay.spoke_label[s.vertex - 1] = s.label;
    }
    for (const auto& a : tr.arcs) {
        if (a.to < 1 || a.to > k || k == 1) {
            why = "arc index out of range";
            return {};
        }
        if (lay.edge[a.to - 1]) {
            why = "repeated arc";
            return {};
        }
        lay.edge[a.to - 1] = true;
        lay.edge_label[a.to - 1] = a.label;
    }
    if (tr.arcs.size() >= k) {
        why = "rim edges close a cycle";
        return {};
    }
    std::vector<Component> out;
    for (std::size_t a = 0; a < k; ++a) {
        if (lay.edge[a]) continue;  // not the start of an arc
        std::size_t len = 1;
        while (len < k && lay.edge[(a + len) % k]) ++len;
        std::size_t spoke = k;
        for (std::size_t j = 0; j < len; ++j) {
            if (lay.spoke_label[(a + j) % k] == 0) continue;
            if (spoke != k) {
                why = "arc with two spokes";
                return {};
            }
            spoke = (a + j) % k;
        }
        if (spoke == k) {
            why = "arc without a spoke";
            return {};
        }
        out.push_back({a, spoke, len});
    }
    return out;
}

} // namespace

bool is_valid_tree(const SpanningTree& tr) {
    if (tr.params.k < 1 || tr.params.q < 0 || tr.params.t < 1) return false;
    Layout lay;
    std::string why;
    auto comps = components(tr, lay, why);
    if (!why.empty()) return false;
    const std::int64_t q = tr.params.q, t = tr.params.t;
    for (const auto& s : tr.spokes)
        if (s.label < 1 + q || s.label > q + t) return false;
    for (const auto& a : tr.arcs)
        if (a.label < 1 || a.label > q) return false;
    return std::is_sorted(tr.spokes.begin(), tr.spokes.end()) && std::is_sorted(tr.arcs.begin(), tr.arcs.end());
}

unsigned tree_dist(const SpanningTree& tr) {
    Layout lay;
    std::string why;
    auto comps = components(tr, lay, why);
    if (!why.empty()) throw InvalidArgument("invalid spanning tree: " + why);
    const std::size_t k = tr.params.k;
    unsigned dist = 0;
    for (const auto& c : comps) {
        const std::size_t offset = (c.spoke + k - c.start) % k;
        dist += static_cast<unsigned>(c.length - 1 - offset);
    }
    return dist;
}

SpanningTree config_to_tree(const Configuration& c) {
    const std::int64_t q = c.params.q;
    if (q < 1) throw Unsupported("tree bijection needs q >= 1");
    if (!is_critical_blocks(c)) throw InvalidArgument(c.to_string() + " is not critical");
    const std::size_t k = c.chips.size();
    SpanningTree tr{c.params, {}, {}};
    for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t x = c.chips[i];
        if (x > q) {
            tr.spokes.push_back({i + 1, x});
            // Forced arc into a spoke vertex whose preceding run holds a 0.
            for (std::size_t back = 1; back < k; ++back) {
                const std::int64_t y = c.chips[(i + k - back) % k];
                if (y > q) break;
                if (y == 0) {
                    tr.arcs.push_back({i + 1, q});
                    break;
                }
            }
        } else if (x >= 1) {
            tr.arcs.push_back({i + 1, x});
        }
    }
    std::sort(tr.arcs.begin(), tr.arcs.end());
    return tr;
}

Configuration tree_to_config(const SpanningTree& tr) {
    if (!is_valid_tree(tr)) throw InvalidArgument("invalid spanning tree");
    Layout lay;
    std::string why;
    auto comps = components(tr, lay, why);
    const std::size_t k = tr.params.k;
    const std::int64_t q = tr.params.q;
    Chips chips(k, 0);
    for (const auto& comp : comps) {
        const std::size_t offset = (comp.spoke + k - comp.start) % k;
        if (offset > 0) {
            // Counter-clockwise of the spoke: a 0, then q's, then the forced arc.
            chips[comp.start] = 0;
            for (std::size_t j = 1; j < offset; ++j) {
                const std::size_t v = (comp.start + j) % k;
                if (lay.edge_label[v] != q) throw InvalidArgument("arc before a spoke must carry label q");
                chips[v] = q;
            }
            if (lay.edge_label[comp.spoke] != q) throw InvalidArgument("forced arc must carry label q");
        }
        chips[comp.spoke] = lay.spoke_label[comp.spoke];
        for (std::size_t j = offset + 1; j < comp.length; ++j) {
            const std::size_t v = (comp.start + j) % k;
            chips[v] = lay.edge_label[v];
        }
    }
    Configuration c{tr.params, std::move(chips)};
    if (config_to_tree(c) != tr) throw InternalError("tree decoding is not inverse to encoding");
    return c;
}

} // namespace wheelzeta
