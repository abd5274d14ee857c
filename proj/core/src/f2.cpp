#include "khsq/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace khsq {

int BitVec::highest_bit() const {
  for (int k = static_cast<int>(w_.size()) - 1; k >= 0; --k)
    if (w_[k]) return 64 * k + 63 - std::countl_zero(w_[k]);
  return -1;
}

BitVec BitMatrix::apply(const BitVec& x) const {
  BitVec out(rows_);
  for (int j = 0; j < cols(); ++j)
    if (x.get(j)) out ^= cols_[j];
  return out;
}

int BitMatrix::rank() const { return f2_rank_of(cols_, rows_); }

std::vector<BitVec> BitMatrix::kernel() const {
  // Column elimination with identity tracking.
  std::vector<BitVec> work = cols_;
  std::vector<BitVec> id;
  id.reserve(cols());
  for (int j = 0; j < cols(); ++j) {
    BitVec e(cols());
    e.set(j, true);
    id.push_back(std::move(e));
  }
  std::vector<int> owner(rows_ > 0 ? rows_ : 1, -1); // pivot bit -> column
  std::vector<BitVec> out;
  for (int j = 0; j < cols(); ++j) {
    int h;
    while ((h = work[j].highest_bit()) >= 0 && owner[h] >= 0) {
      work[j] ^= work[owner[h]];
      id[j] ^= id[owner[h]];
    }
    if (h < 0)
      out.push_back(id[j]);
    else
      owner[h] = j;
  }
  return out;
}

bool Span::insert(const BitVec& v, bool track) {
  BitVec w = v;
  std::vector<int> coeff;
  for (auto& [rv, rc] : rows_) {
    int p = rv.highest_bit();
    if (w.get(p)) {
      w ^= rv;
      for (int t : rc) {
        auto it = std::find(coeff.begin(), coeff.end(), t);
        if (it == coeff.end()) coeff.push_back(t); else coeff.erase(it);
      }
    }
  }
  if (!w.any()) return false;
  if (track) coeff.push_back(tracked_++);
  rows_.push_back({std::move(w), std::move(coeff)});
  return true;
}

BitVec Span::coordinates(const BitVec& v) const {
  BitVec w = v;
  std::vector<int> coeff;
  for (auto& [rv, rc] : rows_) {
    int p = rv.highest_bit();
    if (w.get(p)) {
      w ^= rv;
      for (int t : rc) {
        auto it = std::find(coeff.begin(), coeff.end(), t);
        if (it == coeff.end()) coeff.push_back(t); else coeff.erase(it);
      }
    }
  }
  if (w.any()) throw std::logic_error("vector not in span");
  BitVec out(tracked_);
  for (int t : coeff) out.set(t, true);
  return out;
}

bool Span::contains(const BitVec& v) const {
  BitVec w = v;
  for (auto& [rv, rc] : rows_) {
    int p = rv.highest_bit();
    if (w.get(p)) w ^= rv;
  }
  return !w.any();
}

int f2_rank_of(const std::vector<BitVec>& vecs, int n) {
  std::vector<BitVec> basis;
  for (const auto& v : vecs) {
    BitVec w = v;
    for (const auto& b : basis) {
      int p = b.highest_bit();
      if (w.get(p)) w ^= b;
    }
    if (w.any()) basis.push_back(std::move(w));
  }
  return static_cast<int>(basis.size());
}

int f2_intersection_dim(const std::vector<BitVec>& a,
                        const std::vector<BitVec>& b, int n) {
  std::vector<BitVec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return f2_rank_of(a, n) + f2_rank_of(b, n) - f2_rank_of(all, n);
}

} // namespace khsq
