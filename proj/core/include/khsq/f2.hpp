#pragma once
// Bit-packed linear algebra over F2.

#include <cstdint>
#include <vector>

namespace khsq {

// A vector over F2, packed into 64-bit words.
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(int i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }
  int highest_bit() const; // -1 if zero
  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Matrix over F2 stored as a list of column BitVecs (cols x nrows).
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols) : rows_(rows), cols_(cols, BitVec(rows)) {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }
  BitVec& col(int j) { return cols_[j]; }
  const BitVec& col(int j) const { return cols_[j]; }
  void set(int i, int j, bool v) { cols_[j].set(i, v); }
  bool get(int i, int j) const { return cols_[j].get(i); }

  BitVec apply(const BitVec& x) const; // M * x, x over cols

  int rank() const;
  // Basis of {x : M x = 0}, vectors over cols.
  std::vector<BitVec> kernel() const;

private:
  int rows_ = 0;
  std::vector<BitVec> cols_;
};

// Span of vectors with on-line insertion and membership/coordinates.
// Vectors inserted with track=false extend the span silently; with
// track=true they get a coordinate slot (used for homology representatives).
class Span {
public:
  explicit Span(int n) : n_(n) {}
  // Returns true if v was independent of the current span.
  bool insert(const BitVec& v, bool track);
  int tracked() const { return tracked_; }
  // Reduce v; requires v to lie in the span. Returns coordinates w.r.t. the
  // tracked vectors as a BitVec of length tracked().
  BitVec coordinates(const BitVec& v) const;
  bool contains(const BitVec& v) const;

private:
  int n_;
  int tracked_ = 0;
  std::vector<std::pair<BitVec, std::vector<int>>> rows_; // (vec, tracked coeffs)
};

int f2_rank_of(const std::vector<BitVec>& vecs, int n);
int f2_intersection_dim(const std::vector<BitVec>& a,
                        const std::vector<BitVec>& b, int n);

} // namespace khsq
