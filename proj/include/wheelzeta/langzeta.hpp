#pragma once

#include "wheelzeta/bivariate.hpp"
#include "wheelzeta/matrix.hpp"
#include "wheelzeta/series.hpp"

#include <cstdint>
#include <vector>

namespace wheelzeta {

/// Three-state automaton reading chip values: A on letters 1+q..q+t, B on
/// 1..q, C on 0 (from A or B) or on the letter q (from C).
struct AutomatonMG {
    enum State : int { A = 0, B = 1, C = 2 };

    std::int64_t q = 1;
    std::int64_t t = 1;

    AutomatonMG(std::int64_t q, std::int64_t t);

    /// Target state of reading letter from state s, or -1 if none.
    int step(int s, std::int64_t letter) const;
    IntMatrix transfer_matrix() const;
    static PolyMatrix transfer_matrix_symbolic();
};

/// A closed path reads the cyclic word and visits A. Empty word rejected.
bool mg_accepts(const std::vector<std::int64_t>& word, std::int64_t q, std::int64_t t);

/// tr(M^k) - q^k - 1.
BigInt word_count(unsigned k, std::int64_t q, std::int64_t t);
BivariatePolynomial word_count_symbolic(unsigned k);

/// Accepted words of length k by scanning all (q+t+1)^k words.
std::uint64_t word_count_scan(unsigned k, std::int64_t q, std::int64_t t, std::uint64_t budget = 2'000'000);

/// (1-qT)(1-T) / (1-(1+q+t)T+qT^2) over Z[q,t].
RationalSeries zeta_language();
/// det(I-qT) det(I-T) / det(I-MT), the determinant built over Z[q,t][T].
RationalSeries zeta_language_detform();

/// Numerators and denominators as integer coefficient lists at (q,t).
struct NumericZeta {
    std::vector<BigInt> num, den, series;
};
NumericZeta zeta_language_numeric(std::int64_t q, std::int64_t t, unsigned series_order);

/// zeta_language * Z(E,T) with N1 -> -t, reduced; true iff it equals 1.
bool reciprocity_holds();

} // namespace wheelzeta
