#pragma once

#include "wheelzeta/bivariate.hpp"
#include "wheelzeta/matrix.hpp"
#include "wheelzeta/series.hpp"

namespace wheelzeta {

// Polynomials here use the second variable for N1 = #E(F_q).

/// N_k = q^k + 1 - p_k, where p_k are the power sums of the reciprocal roots
/// of 1 - (1+q-N1)T + qT^2. Throws InternalError if the coefficients in N1
/// fail to alternate in sign.
BivariatePolynomial nk_poly(unsigned k);

/// The three-line circulant circ(1+q-N1, -q, 0, ..., 0, -1); M_1 = [-N1].
PolyMatrix mk_symbolic(unsigned k);
IntMatrix mk_numeric(unsigned k, const BigInt& q, const BigInt& n1);

/// -det M_k.
BivariatePolynomial nk_via_detmk(unsigned k);

/// ECyc_d with N_k = prod_{d|k} ECyc_d.
BivariatePolynomial ecyc(unsigned d);

/// N_k at integers by the power-sum recurrence.
BigInt nk_value(const BigInt& q, const BigInt& n1, unsigned k);

/// Every coefficient of N1^j has sign (-1)^{j+1}.
bool alternates_in_sign(const BivariatePolynomial& p);

/// Z(E,T) = (1 - (1+q-N1)T + qT^2) / ((1-T)(1-qT)).
RationalSeries elliptic_zeta();

} // namespace wheelzeta
