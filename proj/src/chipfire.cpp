#include "wheelzeta/chipfire.hpp"

#include "wheelzeta/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace wheelzeta {

std::string Configuration::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < chips.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(chips[i]);
    }
    return s + "]";
}

Configuration make_configuration(const WheelParams& params, Chips chips) {
    params.validate();
    if (chips.size() != params.k) {
        throw InvalidArgument("configuration has " + std::to_string(chips.size()) + " entries, expected k=" +
                              std::to_string(params.k));
    }
    return Configuration{params, std::move(chips)};
}

bool is_legal(const Configuration& c) {
    return std::all_of(c.chips.begin(), c.chips.end(), [](std::int64_t x) { return x >= 0; });
}

bool is_stable(const Configuration& c) {
    const std::int64_t top = c.params.q + c.params.t;
    return std::all_of(c.chips.begin(), c.chips.end(), [top](std::int64_t x) { return x >= 0 && x <= top; });
}

namespace {

void fire_rim(Chips& chips, std::size_t i, const WheelParams& p) {
    const std::size_t k = chips.size();
    chips[i] -= 1 + p.q + p.t;
    chips[(i + 1) % k] += p.q;
    chips[(i + k - 1) % k] += 1;
}

void fire_bank(Chips& chips, std::int64_t t) {
    for (auto& x : chips) x += t;
}

} // namespace

Configuration fire(const Configuration& c, std::size_t vertex) {
    if (vertex > c.params.k) throw InvalidArgument("vertex " + std::to_string(vertex) + " out of range");
    if (!is_legal(c)) throw IllegalFire("configuration " + c.to_string() + " has negative rim entries");
    Configuration out = c;
    if (vertex == 0) {
        if (!is_stable(c)) throw IllegalFire("the bank may fire only when no rim vertex can");
        fire_bank(out.chips, c.params.t);
        return out;
    }
    const std::int64_t threshold = 1 + c.params.q + c.params.t;
    if (c.chips[vertex - 1] < threshold) {
        throw IllegalFire("v" + std::to_string(vertex) + " holds " + std::to_string(c.chips[vertex - 1]) +
                          " chips, needs " + std::to_string(threshold));
    }
    fire_rim(out.chips, vertex - 1, c.params);
    return out;
}

Configuration stabilize(Configuration c, FiringPolicy policy) {
    if (!is_legal(c)) throw InvalidArgument("cannot stabilize " + c.to_string() + ": negative entries");
    const std::int64_t threshold = 1 + c.params.q + c.params.t;
    const std::size_t k = c.chips.size();
    for (;;) {
        std::size_t pick = k;
        if (policy == FiringPolicy::LowestIndex) {
            for (std::size_t i = 0; i < k; ++i) {
                if (c.chips[i] >= threshold) {
                    pick = i;
                    break;
                }
            }
        } else {
            for (std::size_t i = k; i-- > 0;) {
                if (c.chips[i] >= threshold) {
                    pick = i;
                    break;
                }
            }
        }
        if (pick == k) return c;
        fire_rim(c.chips, pick, c.params);
    }
}

Configuration criticalize(const Configuration& c) {
    Configuration cur = stabilize(c);
    std::set<Chips> seen;
    while (seen.insert(cur.chips).second) {
        fire_bank(cur.chips, cur.params.t);
        cur = stabilize(std::move(cur));
    }
    return cur;
}

bool is_critical_blocks(const Configuration& c) {
    const std::int64_t q = c.params.q;
    if (q < 1) throw Unsupported("block characterization needs q >= 1");
    if (!is_stable(c)) return false;
    const std::size_t k = c.chips.size();
    bool any_b = false;
    for (std::size_t b = 0; b < k; ++b) {
        if (c.chips[b] <= q) continue;
        any_b = true;
        // Scan the run after this B up to the next B (cyclically).
        bool after_zero = false;
        for (std::size_t step = 1; step < k; ++step) {
            const std::int64_t x = c.chips[(b + step) % k];
            if (x > q) break;
            if (after_zero && x != q) return false;
            if (x == 0) after_zero = true;
        }
    }
    return any_b;
}

bool is_critical_dynamic(const Configuration& c) {
    if (!is_stable(c)) return false;
    std::set<Chips> seen;
    Configuration cur = c;
    while (seen.insert(cur.chips).second) {
        fire_bank(cur.chips, cur.params.t);
        cur = stabilize(std::move(cur));
        if (cur.chips == c.chips) return true;
    }
    return false;
}

bool is_critical(const Configuration& c) {
    return c.params.q >= 1 ? is_critical_blocks(c) : is_critical_dynamic(c);
}

bool CriticalGroup::contains(const Configuration& c) const {
    return c.params == params && std::binary_search(elements.begin(), elements.end(), c);
}

std::size_t CriticalGroup::index_of(const Configuration& c) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), c);
    if (it == elements.end() || *it != c) throw InvalidArgument(c.to_string() + " is not in K(" + params.to_string() + ")");
    return static_cast<std::size_t>(it - elements.begin());
}

CriticalGroup enumerate_criticals(const WheelParams& params, std::uint64_t budget) {
    params.validate();
    const auto base = static_cast<std::uint64_t>(params.q + params.t + 1);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < params.k; ++i) {
        if (total > budget / base + 1) throw ResourceLimit("stable-vector count exceeds budget " + std::to_string(budget));
        total *= base;
    }
    if (total > budget) {
        throw ResourceLimit(std::to_string(total) + " stable vectors for " + params.to_string() + " exceed budget " +
                            std::to_string(budget));
    }
    CriticalGroup g{params, {}, group_identity(params)};
    Configuration c{params, Chips(params.k, 0)};
    const std::int64_t top = params.q + params.t;
    for (;;) {
        if (is_critical(c)) g.elements.push_back(c);
        // Odometer with the last entry fastest, which keeps lexicographic order.
        std::size_t i = params.k;
        while (i > 0 && c.chips[i - 1] == top) c.chips[--i] = 0;
        if (i == 0) break;
        ++c.chips[i - 1];
    }
    return g;
}

Configuration group_add(const Configuration& a, const Configuration& b) {
    if (a.params != b.params) throw InvalidArgument("cannot add configurations of different wheels");
    Configuration sum = a;
    for (std::size_t i = 0; i < sum.chips.size(); ++i) sum.chips[i] += b.chips[i];
    return criticalize(sum);
}

Configuration group_identity(const WheelParams& params) {
    params.validate();
    return criticalize(Configuration{params, Chips(params.k, 0)});
}

Configuration class_representative(const WheelParams& params, std::span<const std::int64_t> v) {
    params.validate();
    if (v.size() != params.k) throw InvalidArgument("vector length does not match k");
    Configuration c{params, Chips(v.begin(), v.end())};
    const std::int64_t low = *std::min_element(c.chips.begin(), c.chips.end());
    if (low < 0) {
        const std::int64_t fires = (-low + params.t - 1) / params.t;
        fire_bank(c.chips, fires * params.t);
    }
    return criticalize(c);
}

Configuration group_inverse(const Configuration& c) {
    Chips neg(c.chips.size());
    std::transform(c.chips.begin(), c.chips.end(), neg.begin(), [](std::int64_t x) { return -x; });
    return class_representative(c.params, neg);
}

Configuration group_scalar(std::int64_t m, const Configuration& c) {
    Chips v(c.chips.size());
    std::transform(c.chips.begin(), c.chips.end(), v.begin(), [m](std::int64_t x) { return m * x; });
    return class_representative(c.params, v);
}

Chips parse_chips(const std::string& text) {
    Chips out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        std::int64_t v = 0;
        const char* first = tok.data();
        if (!tok.empty() && tok[0] == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InvalidArgument("bad integer '" + tok + "' in list '" + text + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

} // namespace wheelzeta
