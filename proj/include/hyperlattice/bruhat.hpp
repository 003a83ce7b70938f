#pragma once

#include <utility>
#include <vector>

#include "hyperlattice/types.hpp"

// The Bruhat order: T-block arithmetic, comparison by corner-sum
// domination, covers, subarray counting, decreasing replacements, and
// intercalate/cycle switches.
namespace hyperlattice {

// Sign pattern at the 8 corner positions (i,j,k) with i in {i1,i2} etc.;
// for sign +1, plane k1 is [[+1,-1],[-1,+1]] and plane k2 its negation.
struct TBlock3D {
    int i1, i2, j1, j2, k1, k2;
    int sign = 1;

    bool contiguous() const { return i2 == i1 + 1 && j2 == j1 + 1 && k2 == k1 + 1; }
    friend bool operator==(const TBlock3D&, const TBlock3D&) = default;
};

// Throws unless i1<i2, j1<j2, k1<k2 within [1..n] and sign is +-1.
void validate_tblock(const TBlock3D& t, int n);

// a + the pattern of t; pure.
Hypermatrix apply_tblock(const Hypermatrix& a, const TBlock3D& t);
// The pattern alone, as an order-n hypermatrix.
Hypermatrix tblock_pattern(const TBlock3D& t, int n);

// A positive T-block as a sum of contiguous positive T-blocks, following
// the inductive construction: shrink an axis with gap > 1 by one plane and
// recurse on both parts.
std::vector<TBlock3D> decompose_tblock(const TBlock3D& t);

// a precedes b iff xi(a) >= xi(b) entrywise. The hypermatrix overload
// validates membership in the xi preimage.
bool bruhat_leq(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b);
bool bruhat_leq(const Hypermatrix& a, const Hypermatrix& b);
bool bruhat_leq(const LatinSquare& a, const LatinSquare& b);

// True iff b covers a: the corner-sum difference a - b has exactly one
// nonzero entry, equal to +1 (one positive contiguous T-block upward).
bool covers_in_lattice(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b);

// Cells of a host Latin square; sym is the set of symbols at those cells.
struct Subarray {
    LatinSquare host;
    std::vector<std::pair<int, int>> positions;
};

// X[i,j,k] = #{(a,b) in ([i] x [j]) cap pos(X) : L_{a,b} <= k}.
int subarray_count(const Subarray& x, int i, int j, int k);

// True iff y is a decreasing replacement for x: same positions, same
// row/column symbol multisets, and y[i,j,k] >= x[i,j,k] for every box corner
// (i,j) in [n]^2 and k in sym(x).
bool is_decreasing_replacement(const Subarray& x, const Subarray& y);

// l2 covers l1 in the Latin poset; decided by enumerating the order-n
// Latin squares and scanning for intermediates.
bool covers_in_latin_poset(const LatinSquare& l1, const LatinSquare& l2);

// A 2x2 subarray holding only two symbols, [[b,a],[a,b]] or [[a,b],[b,a]]
// with a < b. decreasing means the switch lowers the square in the order
// (the larger symbol sits at the low corner).
struct Intercalate {
    int r1, r2, c1, c2;
    int a, b;
    bool decreasing;
    friend bool operator==(const Intercalate&, const Intercalate&) = default;
};
std::vector<Intercalate> find_intercalates(const LatinSquare& l);

enum class Axis { kRow, kCol, kSymbol };

// Minimal closed supports for switching lines p and q along the axis: each
// is a cell set that can be swapped on its own, found by following the
// permutation cycle structure, smallest starting column first.
std::vector<std::vector<std::pair<int, int>>> cycle_switch_supports(const LatinSquare& l,
                                                                    Axis axis, int p, int q);

// Swap lines p and q of the axis on exactly the given cells. Throws if the
// support is not a closed union of cycles (result not Latin).
LatinSquare apply_cycle_switch(const LatinSquare& l, Axis axis, int p, int q,
                               const std::vector<std::pair<int, int>>& support);

// Comparison test for a cycle switch: the partial
// permutation the lower-index line receives precedes, in the 2-D Bruhat
// order (sigma domination), the one it gives up. When true, the switched
// square precedes l.
bool cycle_switch_is_decreasing(const LatinSquare& l, Axis axis, int p, int q,
                                const std::vector<std::pair<int, int>>& support);

// Greedy sequence of contiguous positive T-blocks transforming upper into
// lower, raising the lexicographically first corner-sum deficit each step.
struct TBlockWitness {
    bool ok = false;  // false when lower does not precede upper
    std::vector<TBlock3D> blocks;
    // Whether every intermediate hypermatrix stayed inside the xi
    // preimage; reported but not required.
    bool intermediates_valid = true;
};
TBlockWitness tblock_witness(const Hypermatrix& lower, const Hypermatrix& upper);

}  // namespace hyperlattice
