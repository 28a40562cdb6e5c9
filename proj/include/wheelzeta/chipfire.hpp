#pragma once

#include "wheelzeta/bigint.hpp"
#include "wheelzeta/wheel.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wheelzeta {

using Chips = std::vector<std::int64_t>;

/// Chips on the rim vertices v_1..v_k of W_k(q,t). The bank (hub) count is
/// implicit: it is minus the rim total.
struct Configuration {
    WheelParams params;
    Chips chips;

    std::size_t size() const noexcept { return chips.size(); }
    std::string to_string() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Validates params and that chips has exactly k entries.
Configuration make_configuration(const WheelParams& params, Chips chips);

enum class FiringPolicy { LowestIndex, HighestIndex };

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

bool is_legal(const Configuration& c);
/// Every rim entry lies in [0, q+t].
bool is_stable(const Configuration& c);

/// Fires vertex 0 (the bank) or a rim vertex 1..k. The bank may fire only
/// when c is stable; a rim vertex only with at least 1+q+t chips.
Configuration fire(const Configuration& c, std::size_t vertex);

/// Fires eligible rim vertices until stable. Entries must be nonnegative.
Configuration stabilize(Configuration c, FiringPolicy policy = FiringPolicy::LowestIndex);

/// Plays the dollar game (stabilize, bank fires, repeat) and returns the
/// first stable configuration seen twice.
Configuration criticalize(const Configuration& c);

/// Block-grammar test: the cyclic word is a concatenation of blocks
/// B M..M | B M..M 0 | B M..M 0 q..q with B in [1+q, q+t], M in [1, q].
/// Requires q >= 1.
bool is_critical_blocks(const Configuration& c);

/// Stable and revisited by its own dollar-game orbit.
bool is_critical_dynamic(const Configuration& c);

/// Block test for q >= 1, orbit test for q = 0.
bool is_critical(const Configuration& c);

struct CriticalGroup {
    WheelParams params;
    std::vector<Configuration> elements;  // lexicographic order
    Configuration identity;

    BigInt order() const { return BigInt(static_cast<unsigned long>(elements.size())); }
    bool contains(const Configuration& c) const;
    /// Position of c in elements; throws InvalidArgument if absent.
    std::size_t index_of(const Configuration& c) const;
};

/// All critical configurations, by testing every stable vector.
CriticalGroup enumerate_criticals(const WheelParams& params, std::uint64_t budget = kDefaultEnumerationBudget);

Configuration group_add(const Configuration& a, const Configuration& b);
Configuration group_identity(const WheelParams& params);
Configuration group_inverse(const Configuration& c);
/// Critical representative of v modulo the row lattice of the reduced
/// Laplacian; entries of v may be negative.
Configuration class_representative(const WheelParams& params, std::span<const std::int64_t> v);
Configuration group_scalar(std::int64_t m, const Configuration& c);

/// Parses "2,4,2" into chips.
Chips parse_chips(const std::string& text);

} // namespace wheelzeta
