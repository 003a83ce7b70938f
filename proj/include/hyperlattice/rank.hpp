#pragma once

#include "hyperlattice/types.hpp"

// Rank and weight functions on the corner-sum lattice.
//
// Orientation: rank 0 sits at the lattice minimum, which has the entrywise
// LARGEST corner sums; moving up one cover decreases rho by exactly 1.
namespace hyperlattice {

struct RankProfile {
    int n = 0;
    long long rho = 0;
    long long rank = 0;
};

// Sum of the corner-sum entries of l. Computed both as the direct sum over
// xi(l) and as sum (n-i+1)(n-j+1)(n-L_ij+1) over the cell-value array; the
// two must agree. Requires l in the xi preimage of the lattice.
long long rho(const Hypermatrix& l);
long long rho(const CornerSumHypermatrix& c);

// rho of the lattice minimum: (69n^5+180n^4+170n^3+60n^2+c(n)*n)/480 with
// c(n) = 16 for even n and 1 for odd n; checked against direct summation.
long long m_closed_form(int n);

// rank = m(n) - rho; cross-checked against the closed alternative
// (-11n^5+20n^4+10n^3-20n^2+c(n)*n)/480 + (1/2) sum (i-j)^2 (n-L_ij).
long long rank_of(const Hypermatrix& l);
long long rank_of(const CornerSumHypermatrix& c);
RankProfile rank_profile(const CornerSumHypermatrix& c);

// (1/2) sum (i-j)^2 A_ij for an alternating sign matrix; agrees with
// rho(I_n) - rho(A) in the 2-D sense.
long long asm_rank(const Matrix& m);

// The symbol, row, and column planes of a Latin square each have ASM ranks
// summing to n^2(n^2-1)/12.
bool rank_sum_identity_check(const LatinSquare& l);

// rho(l) + sum of the 2-D corner sums of the cell-value array = n^2(n+1)^3/4.
bool sigma_sum_identity_check(const Hypermatrix& l);

// Rank of the whole lattice: (9n^5-10n^3+c(n)*n)/240; checked against the
// entry sum of (minimum - maximum).
long long lattice_rank(int n);

}  // namespace hyperlattice
