#pragma once

#include "wheelzeta/bigint.hpp"
#include "wheelzeta/matrix.hpp"

#include <vector>

namespace wheelzeta {

/// Diagonal of the Smith normal form: nonnegative, d1 | d2 | ..., one entry
/// per min(rows, cols). Zeros (rank deficiency) sit at the end.
struct SNFResult {
    std::vector<BigInt> invariant_factors;

    /// Factors different from 1.
    std::vector<BigInt> nontrivial() const;
    /// Product of the nonzero factors.
    BigInt product() const;
    bool divisibility_chain_holds() const;

    friend bool operator==(const SNFResult&, const SNFResult&) = default;
};

/// Smith normal form by row/column swaps, negation, and adding integer
/// multiples of one row (column) to another, pivoting on the entry of least
/// absolute value.
SNFResult smith_normal_form(IntMatrix m);

/// Invariant factors of a block matrix diag(I_pad, m).
SNFResult smith_normal_form_padded(const IntMatrix& m, std::size_t pad);

} // namespace wheelzeta
