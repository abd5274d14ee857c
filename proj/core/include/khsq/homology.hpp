#pragma once
// Khovanov homology over Z (via Smith normal form) and over F2 (with
// tracked cycle representatives, projection, and the integral Bockstein).

#include <map>
#include <memory>
#include <vector>

#include "khsq/complex.hpp"
#include "khsq/f2.hpp"
#include "khsq/snf.hpp"

namespace khsq {

// One bigraded piece of integral homology: Z^free + sum Z/torsion[k].
struct KhGroup {
  int free = 0;
  std::vector<std::int64_t> torsion; // invariant factors > 1, sorted
  bool trivial() const { return free == 0 && torsion.empty(); }
};

// F2 boundary matrix d : C^{i,j} -> C^{i+1,j} in the canonical generator
// orders (columns indexed by generators of 'from').
BitMatrix f2_boundary(const Complex& c, Bigrading from);

// Signed integral boundary matrix for the same map.
SparseInt z_boundary(const Complex& c, Bigrading from);

// Integral Khovanov homology; only nontrivial bigradings appear.
std::map<Bigrading, KhGroup> kh_z(const Complex& c);

// F2 homology at one bigrading, with a chosen basis of cycle representatives.
class F2Homology {
public:
  F2Homology(const Complex& c, Bigrading ij);

  Bigrading grading() const { return ij_; }
  int chain_dim() const { return chain_dim_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  // Cycle representatives of the basis, as chain vectors over the canonical
  // generator order at ij.
  const std::vector<BitVec>& representatives() const { return reps_; }

  bool is_cycle(const BitVec& chain) const;
  // Homology coordinates of a cycle (length dim()); boundaries map to zero.
  BitVec project(const BitVec& cycle) const;

private:
  Bigrading ij_;
  int chain_dim_;
  std::vector<BitVec> reps_;
  BitMatrix d_out_;
  std::unique_ptr<Span> span_;
};

// Bockstein of the F2 homology class with cycle representative 'cycle' at
// grading 'from.grading()': lift 0/1 to Z, apply the signed differential,
// halve, reduce mod 2, project at (i+1, j).
BitVec bockstein(const Complex& c, const F2Homology& from, const F2Homology& to,
                 const BitVec& cycle);

} // namespace khsq
