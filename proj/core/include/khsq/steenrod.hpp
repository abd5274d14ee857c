#pragma once
// Chain-level sq^1/sq^2 via boundary matchings and match graphs, on an
// abstract three-level input, plus the Khovanov instantiation, induced
// homology-level Sq matrices, and the St invariant.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "khsq/complex.hpp"
#include "khsq/f2.hpp"
#include "khsq/homology.hpp"

namespace khsq {

// Three consecutive chain levels A -> B -> C with all the structure the
// squares need. Generators are indices into their level; incidence lists
// carry the cube sign s in F2. frame/lam are keyed by (x, y) with x in C,
// y in A and nonempty between-set.
struct SquareInput {
  int nA = 0, nB = 0, nC = 0;
  std::vector<std::vector<std::pair<int, int>>> dAB; // y -> [(z, s)]
  std::vector<std::vector<std::pair<int, int>>> dBC; // z -> [(x, s)]
  std::map<std::pair<int, int>, int> frame;          // (x, y) -> f in F2
  // (x, y) -> fixed-point-free involution on the between-set, as pairs.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> lam;

  std::vector<int> between(int x, int y) const;
  int sAB(int z, int y) const;
  int sBC(int x, int z) const;
  // Checks all structural invariants (even between-sets, involutivity,
  // ladybug-changes-sign); throws std::logic_error on violation.
  void validate() const;
};

// For each z in B: involution mu on Pre_c(z) and sign map h.
struct BoundaryMatching {
  std::vector<std::map<int, int>> mu; // per z: y -> partner
  std::vector<std::map<int, int>> h;  // per z: y -> h in F2
};

// seed 0: deterministic canonical-order pairing; other seeds: pseudorandom
// valid matchings. c is an F2 cycle over A (length nA).
BoundaryMatching make_boundary_matching(const SquareInput& in, const BitVec& c,
                                        std::uint64_t seed = 0);

BitVec sq1_chain(const SquareInput& in, const BitVec& c,
                 const BoundaryMatching& m);

// The match graph G_c(x): vertices (z, y); e-1 edges pair vertices through
// lam and carry the frame label; e-2 edges pair through mu and are oriented
// a -> b when the h-values differ (from h=0 to h=1).
struct MatchGraph {
  std::vector<std::pair<int, int>> verts; // (z, y)
  struct Edge1 {
    int a, b, label;
  };
  struct Edge2 {
    int a, b;
    bool oriented;
  };
  std::vector<Edge1> e1;
  std::vector<Edge2> e2;
};

MatchGraph build_graph(const SquareInput& in, const BitVec& c,
                       const BoundaryMatching& m, int x);

struct GraphCounts {
  int components = 0, f_count = 0, g_count = 0;
};

GraphCounts graph_counts(const MatchGraph& g);

BitVec sq2_chain(const SquareInput& in, const BitVec& c,
                 const BoundaryMatching& m);

// Khovanov instantiation at levels (i,j), (i+1,j), (i+2,j).
SquareInput khovanov_square_input(const Complex& c, Bigrading ij);

// Induced maps on F2 homology at one homological level of quantum grading j.
struct SqLevel {
  int dimA = 0, dimB = 0, dimC = 0;    // Kh_F2 dims at i, i+1, i+2
  std::vector<BitVec> sq1;             // column k: image of basis class k
  std::vector<BitVec> sq2;
};

// i -> maps out of Kh^{i,j}; levels with dimA = 0 are omitted.
using SqMaps = std::map<int, SqLevel>;

SqMaps sq_maps(const Complex& c, int j, std::uint64_t seed = 0);

// St(i, j) = (r2-r4, r1-r2-r3+r4, r4, r3-r4).
std::array<int, 4> st_invariant(const SqMaps& m, int i);

} // namespace khsq
