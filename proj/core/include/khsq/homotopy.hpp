#pragma once
// Stable homotopy type per quantum grading: quiver decomposition into the
// nine irreducible summands, the width-3 hypothesis gate, and wedge output.

#include <map>
#include <string>
#include <vector>

#include "khsq/f2.hpp"
#include "khsq/homology.hpp"
#include "khsq/steenrod.hpp"

namespace khsq {

// A -> B -> C over F2 with g f = 0 and a chord map s: A -> C.
struct Quiver {
  int d1 = 0, d2 = 0, d3 = 0;
  std::vector<BitVec> f; // d1 columns of length d2
  std::vector<BitVec> g; // d2 columns of length d3
  std::vector<BitVec> s; // d1 columns of length d3
};

struct DecompositionCounts {
  int s1 = 0, s2 = 0, s3 = 0; // one-dimensional summands at A, B, C
  int p1 = 0, p2 = 0;         // Id: A->B and Id: B->C
  int x1 = 0, x2 = 0, x3 = 0, x4 = 0;
};

// The unique decomposition; throws std::logic_error on a quiver that is not
// a valid direct sum of the nine irreducibles (negative count).
DecompositionCounts decompose_quiver(const Quiver& q);

// Width-3 hypothesis on a Kh_Z table: support on diagonals 2i-j in
// {sigma, sigma+2, sigma+4}; 2-power torsion only; no torsion on the
// sigma diagonal.
struct Width3Report {
  bool ok = false;
  int sigma = 0;          // valid when ok
  std::string failure;    // nonempty when !ok
};

Width3Report check_width3(const std::map<Bigrading, KhGroup>& kh);

struct WedgeSummand {
  enum Kind { Sphere, RP2, CP2, RP5modRP2, RP4modRP1, SmashRP2 } kind;
  int k; // Sphere: dimension; others: suspension exponent
  friend bool operator==(const WedgeSummand&, const WedgeSummand&) = default;
  friend auto operator<=>(const WedgeSummand&, const WedgeSummand&) = default;
};

struct WedgeExpr {
  std::vector<WedgeSummand> summands; // canonically sorted
  std::string text() const;           // e.g. "S^-9 v Σ^-10 RP2"
};

std::string summand_text(const WedgeSummand& s);

// Reduced F2 cohomology of the wedge, degree -> dimension.
std::map<int, int> wedge_cohomology(const WedgeExpr& w);

// Dimension of Kh_F2 at ij from the integral table (universal coefficients;
// requires all torsion 2-power, which the gate guarantees).
int f2_dim(const std::map<Bigrading, KhGroup>& kh, Bigrading ij);

// The wedge for quantum grading j of a link passing the width-3 gate with
// the given sigma. sq must be sq_maps(c, j).
WedgeExpr homotopy_type(const std::map<Bigrading, KhGroup>& kh,
                        const SqMaps& sq, int j, int sigma);

} // namespace khsq
