#pragma once

#include <vector>

#include "hyperlattice/types.hpp"
#include "json.hpp"

// Lattice operations on corner-sum hypermatrices.
//
// Orientation: a precedes b exactly when a's corner sums dominate b's
// entrywise, so the JOIN (least upper bound) is the entrywise MIN of
// corner sums and the MEET is the entrywise MAX.
namespace hyperlattice {

CornerSumHypermatrix meet(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b);
CornerSumHypermatrix join(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b);

// The unique minimum: entry min(k*min(i,j), ij - (n-k)*max(0, i+j-n)).
// Construction cross-checks the equivalent four-case piecewise form.
CornerSumHypermatrix minimum_element(int n);
int minimum_entry_piecewise(int n, int i, int j, int k);

// The unique maximum: entry max(k*max(0, i+j-n), ij - (n-k)*min(i,j)).
CornerSumHypermatrix maximum_element(int n);

// meet(x, join(y, z)) == join(meet(x, y), meet(x, z)).
bool is_distributive_triple(const CornerSumHypermatrix& x, const CornerSumHypermatrix& y,
                            const CornerSumHypermatrix& z);

// Elements covering exactly one element. Cover candidates are found by
// single-entry increments, so this needs no pairwise scan.
std::vector<CornerSumHypermatrix> join_irreducibles(
    const std::vector<CornerSumHypermatrix>& elements);

// Elements the given one covers: single-entry +1 perturbations that stay
// valid (larger corner sums sit lower).
std::vector<CornerSumHypermatrix> covered_elements(const CornerSumHypermatrix& c);

// The minimum element with its (2,2,2) entry lowered by 1. Valid for n >= 4;
// its preimage under xi has a -1 cell, so it is not a Latin square.
CornerSumHypermatrix construct_un(int n);

// Structured report showing that the order-n lattice is not the
// Dedekind-MacNeille completion of the Latin squares it is built from.
// For n >= 4: U_n covers only the minimum (join-irreducible) yet its xi
// preimage is not Latin, plus the analogous plane-sum witness at n = 4.
// For n = 3: computes the completion by cut closure over the 12 Latin
// squares and confirms it matches the 35-element lattice.
nlohmann::json dm_witness_report(int n);

}  // namespace hyperlattice
