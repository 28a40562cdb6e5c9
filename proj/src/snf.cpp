#include "wheelzeta/snf.hpp"

#include <utility>

namespace wheelzeta {

std::vector<BigInt> SNFResult::nontrivial() const {
    std::vector<BigInt> out;
    for (const auto& f : invariant_factors) {
        if (f != 1) out.push_back(f);
    }
    return out;
}

BigInt SNFResult::product() const {
    BigInt p = 1;
    for (const auto& f : invariant_factors) {
        if (sgn(f) != 0) p *= f;
    }
    return p;
}

bool SNFResult::divisibility_chain_holds() const {
    for (std::size_t i = 0; i + 1 < invariant_factors.size(); ++i) {
        const BigInt& a = invariant_factors[i];
        const BigInt& b = invariant_factors[i + 1];
        if (sgn(a) < 0 || sgn(b) < 0) return false;
        if (sgn(a) == 0) {
            if (sgn(b) != 0) return false;
            continue;
        }
        if (sgn(BigInt(b % a)) != 0) return false;
    }
    return true;
}

namespace {

// Row r -= f * row s, over columns from `from` onward.
void row_axpy(IntMatrix& m, std::size_t r, std::size_t s, const BigInt& f, std::size_t from) {
    for (std::size_t c = from; c < m.cols(); ++c) m(r, c) -= f * m(s, c);
}

void col_axpy(IntMatrix& m, std::size_t c, std::size_t s, const BigInt& f, std::size_t from) {
    for (std::size_t r = from; r < m.rows(); ++r) m(r, c) -= f * m(r, s);
}

// Moves the smallest nonzero |entry| of the trailing block to (k, k).
bool place_min_pivot(IntMatrix& m, std::size_t k) {
    bool found = false;
    std::size_t br = k, bc = k;
    BigInt best;
    for (std::size_t r = k; r < m.rows(); ++r) {
        for (std::size_t c = k; c < m.cols(); ++c) {
            if (sgn(m(r, c)) == 0) continue;
            BigInt a = abs(m(r, c));
            if (!found || a < best) {
                found = true;
                best = a;
                br = r;
                bc = c;
            }
        }
    }
    if (!found) return false;
    m.swap_rows(k, br);
    m.swap_cols(k, bc);
    return true;
}

} // namespace

SNFResult smith_normal_form(IntMatrix m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t k = 0; k < n; ++k) {
        if (!place_min_pivot(m, k)) break;
        for (;;) {
            bool dirty = false;
            for (std::size_t r = k + 1; r < m.rows(); ++r) {
                if (sgn(m(r, k)) == 0) continue;
                BigInt f;
                mpz_fdiv_q(f.get_mpz_t(), m(r, k).get_mpz_t(), m(k, k).get_mpz_t());
                row_axpy(m, r, k, f, k);
                if (sgn(m(r, k)) != 0) dirty = true;
            }
            for (std::size_t c = k + 1; c < m.cols(); ++c) {
                if (sgn(m(k, c)) == 0) continue;
                BigInt f;
                mpz_fdiv_q(f.get_mpz_t(), m(k, c).get_mpz_t(), m(k, k).get_mpz_t());
                col_axpy(m, c, k, f, k);
                if (sgn(m(k, c)) != 0) dirty = true;
            }
            if (dirty) {
                place_min_pivot(m, k);
                continue;
            }
            // Row and column cleared; the pivot must divide the rest.
            bool fixed = false;
            for (std::size_t r = k + 1; r < m.rows() && !fixed; ++r) {
                for (std::size_t c = k + 1; c < m.cols(); ++c) {
                    if (sgn(BigInt(m(r, c) % m(k, k))) != 0) {
                        for (std::size_t cc = k; cc < m.cols(); ++cc) m(k, cc) += m(r, cc);
                        fixed = true;
                        break;
                    }
                }
            }
            if (!fixed) break;
        }
        if (sgn(m(k, k)) < 0) m(k, k) = -m(k, k);
    }
    SNFResult out;
    out.invariant_factors.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.invariant_factors.push_back(m(k, k));
    return out;
}

SNFResult smith_normal_form_padded(const IntMatrix& m, std::size_t pad) {
    IntMatrix big(m.rows() + pad, m.cols() + pad);
    for (std::size_t i = 0; i < pad; ++i) big(i, i) = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) big(r + pad, c + pad) = m(r, c);
    return smith_normal_form(std::move(big));
}

} // namespace wheelzeta
