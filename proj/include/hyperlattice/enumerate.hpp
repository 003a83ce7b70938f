#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperlattice/triangles.hpp"
#include "hyperlattice/types.hpp"

// Exhaustive generators and Hasse graph construction. All enumerators emit
// elements in lexicographic order of their flattened entry sequence, so
// node ids in serialized graphs are stable across runs.
namespace hyperlattice {

// Thrown when n exceeds the per-kind enumeration cap. The caps guard
// accidental explosion; HYPERLATTICE_MAX_N in the environment raises them.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cap for the given kind ("latin", "asm", "ashm", "pashm", "corner-sum",
// "triangle"), after applying the environment override.
int enumeration_cap(const std::string& kind);

std::vector<LatinSquare> enumerate_latin(int n);
std::vector<Matrix> enumerate_asm(int n);

// Both strategies must produce identical sorted element lists:
// kAsmSequences composes n-long sequences of order-n ASM planes with
// running vertical feasibility pruning; kFilterCornerSums maps the
// corner-sum enumeration through xi_inverse and filters by predicate.
enum class Strategy { kAsmSequences, kFilterCornerSums };
std::vector<Hypermatrix> enumerate_ashm(int n, Strategy s = Strategy::kAsmSequences);
std::vector<Hypermatrix> enumerate_pashm(int n, Strategy s = Strategy::kAsmSequences);

// Depth-first fill of interior entries in (k,i,j) lexicographic order,
// pruning each placement with the step bounds in all three directions and
// with reachability of the boundary values.
std::vector<CornerSumHypermatrix> enumerate_corner_sum(int n);

// Independent backtracking over multiplicity tables satisfying the four
// defining conditions; count must equal enumerate_corner_sum(n).size().
std::vector<MonotoneHypertriangle> enumerate_monotone_hypertriangles(int n);

// Cover graph of a finite poset. Edge (a,b) means b covers a.
struct HasseGraph {
    std::string kind;
    int n = 0;
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
};

// Fast path for the full corner-sum lattice: covers are exactly the pairs
// whose difference is a single +1 entry, found by probing a hash index
// with each one-entry decrement. threads <= 0 picks the hardware count.
HasseGraph build_hasse(const std::vector<CornerSumHypermatrix>& elements, int threads = 1);

// Generic path for arbitrary sub-posets: transitive reduction of the
// comparability digraph given by leq.
HasseGraph build_hasse(int count, const std::function<bool(int, int)>& leq,
                       std::string kind = "poset", int n = 0);

// Reachability closure of the cover graph; result[a*m + b] = (a <= b).
std::vector<char> hasse_leq_closure(const HasseGraph& h);

struct LatticeCheck {
    bool ok = true;
    // On failure, a pair without a unique least upper / greatest lower
    // bound, and which side failed.
    int a = -1, b = -1;
    std::string reason;
};
LatticeCheck is_lattice(const HasseGraph& h);

// Longest-path rank from the minimal elements.
std::vector<int> hasse_ranks(const HasseGraph& h);
// True iff every cover edge raises the longest-path rank by exactly one
// (for bounded posets this is equal maximal chain lengths).
bool is_graded(const HasseGraph& h);

// DOT and JSON adjacency exports; labels may be empty.
std::string hasse_to_dot(const HasseGraph& h, const std::vector<std::string>& labels);
std::string hasse_to_json(const HasseGraph& h, const std::vector<std::string>& labels);

}  // namespace hyperlattice
