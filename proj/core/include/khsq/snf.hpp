#pragma once
// Smith normal form over the integers, tuned for sparse boundary matrices
// with +-1 entries: unit pivots are eliminated sparsely first, and only the
// residual dense core goes through full SNF. int64 arithmetic with overflow
// detection; arbitrary precision fallback on overflow.

#include <cstdint>
#include <map>
#include <vector>

namespace khsq {

struct SparseInt {
  int rows = 0, cols = 0;
  // column -> (row -> value), zero values absent
  std::vector<std::map<int, std::int64_t>> col;

  SparseInt() = default;
  SparseInt(int r, int c) : rows(r), cols(c), col(c) {}
  void add(int r, int c, std::int64_t v);
};

// Nonzero invariant factors d1 | d2 | ... of M.
std::vector<std::int64_t> smith_invariant_factors(const SparseInt& m);

} // namespace khsq
