#pragma once

#include "wheelzeta/bivariate.hpp"
#include "wheelzeta/matrix.hpp"
#include "wheelzeta/snf.hpp"
#include "wheelzeta/wheel.hpp"

namespace wheelzeta {

/// F^_index(q,t) for even index >= -2, by the three-term recurrence.
BivariatePolynomial fhat(int index);

/// F^_{2k} as the sum over subsets of {1..2k} with no two consecutive
/// elements of q^{#even} t^{k-#S}. Exponential; used as an oracle.
BivariatePolynomial fhat_subsets(int index);

/// [[1+q+t,1],[-q,0]]^m. Throws InternalError if repeated multiplication
/// disagrees with [[F^_{2m}, F^_{2m-2}], [-qF^_{2m-2}, -qF^_{2m-4}]].
PolyMatrix matrix_power_fhat(unsigned m);

/// k x k band matrix with 1 on the diagonal, -delta below it, q two below,
/// plus corner blocks [[A,B],[C,D]] in rows 0-1 and [[W,X],[Y,Z]] in rows
/// k-2, k-1 of the last two columns.
struct GenSmithInput {
    unsigned k = 3;
    BivariatePolynomial delta;
    PolyMatrix abcd;  // 2x2
    PolyMatrix wxyz;  // 2x2
};

PolyMatrix gensmith_full_matrix(const GenSmithInput& in);

/// [[delta,1],[-q,0]]^{k-2} [[A,B],[C,D]] + [[W,X],[Y,Z]]; its SNF padded
/// with k-2 ones equals that of the full matrix.
PolyMatrix gensmith_reduce(const GenSmithInput& in);

GenSmithInput wheel_gensmith_input(unsigned k);
/// Input for the deformed wheel on k+1 rim vertices (dimension k+1).
GenSmithInput deformed_gensmith_input(unsigned k);

/// [[qF^_{2k-4}+1, qF^_{2k-2}], [F^_{2k-2}, F^_{2k}-1]].
PolyMatrix wheel_two_by_two(unsigned k);
/// [[qF^_{2k-2}+1, F^_{2k}-tF^_{2k-2}], [qF^_{2k}, F^_{2k+2}-tF^_{2k}-1]].
PolyMatrix deformed_two_by_two(unsigned k);

/// Row and column moves taking gensmith_reduce(wheel_gensmith_input(k)) to
/// wheel_two_by_two(k): add delta*row0 to row1, negate column 1, transpose.
PolyMatrix normalize_wheel_reduction(const PolyMatrix& r);
/// Same without the transpose, for the deformed wheel.
PolyMatrix normalize_deformed_reduction(const PolyMatrix& r);

SNFResult wheel_group_invariants(const WheelParams& params);

/// Reduced Laplacian of W_{k+1}(q,t) with all spokes at v_1 removed.
IntMatrix deformed_reduced_laplacian(const WheelParams& params);
PolyMatrix deformed_reduced_laplacian_symbolic(unsigned k);

struct DeformedInvariants {
    SNFResult snf;
    BigInt predicted_d1;  // gcd(t, 1+q+...+q^k)
    BigInt d1;            // smallest invariant factor of the two that may exceed 1
    bool cyclic() const { return snf.nontrivial().size() <= 1; }
};

/// params.k is the deformed index k; the matrix has size k+1.
DeformedInvariants deformed_wheel_invariants(const WheelParams& params);

} // namespace wheelzeta
