#include "khsq/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace khsq {

void SparseInt::add(int r, int c, std::int64_t v) {
  if (v == 0) return;
  auto& m = col[c];
  auto [it, fresh] = m.try_emplace(r, 0);
  it->second += v;
  if (it->second == 0) m.erase(it);
}

namespace {

using Big = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Dense SNF skeleton shared by the int64 (overflow-checked) and cpp_int paths.
template <typename I, typename Sub, typename Abs>
std::vector<I> dense_snf(std::vector<std::vector<I>> a, Sub sub_mul, Abs absv) {
  std::vector<I> out;
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  int r = 0, c = 0;
  while (r < m && c < n) {
    int bi = -1, bj = -1;
    for (int i = r; i < m; ++i)
      for (int j = c; j < n; ++j)
        if (a[i][j] != 0 && (bi < 0 || absv(a[i][j]) < absv(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    std::swap(a[r], a[bi]);
    for (int i = 0; i < m; ++i) std::swap(a[i][c], a[i][bj]);
    bool redo = true;
    while (redo) {
      redo = false;
      I p = a[r][c];
      for (int i = 0; i < m; ++i) {
        if (i == r || a[i][c] == 0) continue;
        I q = a[i][c] / p;
        if (q != 0)
          for (int j = 0; j < n; ++j) a[i][j] = sub_mul(a[i][j], q, a[r][j]);
        if (a[i][c] != 0) {
          std::swap(a[r], a[i]); // remainder smaller than pivot: restart
          redo = true;
          break;
        }
      }
      if (redo) continue;
      p = a[r][c];
      for (int j = 0; j < n; ++j) {
        if (j == c || a[r][j] == 0) continue;
        I q = a[r][j] / p;
        if (q != 0)
          for (int i = 0; i < m; ++i) a[i][j] = sub_mul(a[i][j], q, a[i][c]);
        if (a[r][j] != 0) {
          for (int i = 0; i < m; ++i) std::swap(a[i][c], a[i][j]);
          redo = true;
          break;
        }
      }
    }
    out.push_back(absv(a[r][c]));
    ++r;
    ++c;
  }
  return out;
}

template <typename I, typename Gcd, typename Mul>
void fix_divisibility(std::vector<I>& out, Gcd gcd, Mul mul) {
  for (std::size_t x = 0; x < out.size(); ++x)
    for (std::size_t y = x + 1; y < out.size(); ++y)
      if (out[y] % out[x] != 0) {
        I g = gcd(out[x], out[y]);
        I l = mul(out[x] / g, out[y]);
        out[x] = g;
        out[y] = l;
      }
  std::sort(out.begin(), out.end());
}

} // namespace

std::vector<std::int64_t> smith_invariant_factors(const SparseInt& m) {
  // Phase 1: eliminate +-1 pivots sparsely; each contributes invariant factor 1.
  std::vector<std::map<int, std::int64_t>> cols = m.col;
  std::vector<bool> row_done(m.rows, false), col_done(m.cols, false);
  int unit_pivots = 0;
  while (true) {
    int bi = -1, bj = -1;
    std::size_t best = 0;
    for (int j = 0; j < m.cols; ++j) {
      if (col_done[j]) continue;
      for (auto& [i, v] : cols[j]) {
        if (v != 1 && v != -1) continue;
        if (bi < 0 || cols[j].size() < best) {
          best = cols[j].size();
          bi = i;
          bj = j;
        }
        break; // first unit entry of this column is as good as any
      }
    }
    if (bi < 0) break;
    std::int64_t piv = cols[bj].at(bi);
    for (int j2 = 0; j2 < m.cols; ++j2) {
      if (j2 == bj || col_done[j2]) continue;
      auto it = cols[j2].find(bi);
      if (it == cols[j2].end()) continue;
      std::int64_t q = it->second / piv; // exact: piv is a unit
      for (auto& [i2, pv] : cols[bj]) {
        auto [t, fresh] = cols[j2].try_emplace(i2, 0);
        t->second -= q * pv;
        if (t->second == 0) cols[j2].erase(t);
      }
    }
    row_done[bi] = true;
    col_done[bj] = true;
    cols[bj].clear();
    ++unit_pivots;
  }
  // Phase 2: dense SNF on the residual core.
  std::vector<std::int64_t> result(unit_pivots, 1);
  std::vector<int> live_cols;
  for (int j = 0; j < m.cols; ++j) {
    if (col_done[j]) continue;
    for (auto it = cols[j].begin(); it != cols[j].end();)
      it = row_done[it->first] ? cols[j].erase(it) : std::next(it);
    if (!cols[j].empty()) live_cols.push_back(j);
  }
  if (!live_cols.empty()) {
    std::vector<int> rmap(m.rows, -1);
    int nr = 0;
    for (int j : live_cols)
      for (auto& [i, v] : cols[j])
        if (rmap[i] < 0) rmap[i] = nr++;
    std::vector<std::vector<std::int64_t>> dense(
        nr, std::vector<std::int64_t>(live_cols.size(), 0));
    for (std::size_t jj = 0; jj < live_cols.size(); ++jj)
      for (auto& [i, v] : cols[live_cols[jj]]) dense[rmap[i]][jj] = v;
    std::vector<std::int64_t> core;
    try {
      core = dense_snf<std::int64_t>(
          dense,
          [](std::int64_t a, std::int64_t q, std::int64_t b) {
            return checked_sub(a, checked_mul(q, b));
          },
          [](std::int64_t v) { return std::llabs(v); });
      fix_divisibility(
          core, [](std::int64_t a, std::int64_t b) { return std::gcd(a, b); },
          checked_mul);
    } catch (const Overflow&) {
      std::vector<std::vector<Big>> big(dense.size(),
                                        std::vector<Big>(live_cols.size()));
      for (std::size_t i = 0; i < dense.size(); ++i)
        for (std::size_t j = 0; j < dense[i].size(); ++j) big[i][j] = dense[i][j];
      auto bigcore = dense_snf<Big>(
          big, [](const Big& a, const Big& q, const Big& b) { return a - q * b; },
          [](const Big& v) { return boost::multiprecision::abs(v); });
      fix_divisibility(
          bigcore,
          [](const Big& a, const Big& b) {
            return boost::multiprecision::gcd(a, b);
          },
          [](const Big& a, const Big& b) { return a * b; });
      for (auto& f : bigcore) {
        if (f > std::numeric_limits<std::int64_t>::max())
          throw std::overflow_error("invariant factor exceeds int64");
        core.push_back(f.convert_to<std::int64_t>());
      }
    }
    result.insert(result.end(), core.begin(), core.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

} // namespace khsq
