#pragma once
// Kauffman-bracket state sum for the unnormalized Jones polynomial, used as
// an independent oracle for the Euler characteristic of Kh. Deliberately
// avoids the resolve/complex machinery: circles are counted by union-find
// over edge labels.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "khsq/homology.hpp"
#include "khsq/pd.hpp"

namespace khsq {

// Laurent polynomial in q: exponent -> coefficient (zeros absent).
using Laurent = std::map<int, std::int64_t>;

inline Laurent jones_state_sum(const Diagram& d) {
  int n = d.n(), nm = d.n_minus(), ne = d.n_edges();
  Laurent out;
  for (Vertex u = 0; u < (Vertex{1} << n); ++u) {
    std::vector<int> uf(ne);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (int c = 0; c < n; ++c)
      for (auto [s1, s2] : Diagram::smooth_pairs((u >> c) & 1)) {
        int a = find(d.edge_index(d.crossings()[c].e[s1]));
        int b = find(d.edge_index(d.crossings()[c].e[s2]));
        uf[a] = b;
      }
    int circles = 0;
    for (int e = 0; e < ne; ++e)
      if (find(e) == e) ++circles;
    std::int64_t sgn = ((popcount(u) - nm) & 1) ? -1 : 1;
    int base = n - 3 * nm + popcount(u);
    // (q + q^-1)^circles
    std::vector<std::int64_t> binom(circles + 1, 1);
    for (int k = 1; k <= circles; ++k)
      binom[k] = binom[k - 1] * (circles - k + 1) / k;
    for (int k = 0; k <= circles; ++k) {
      int exp = base + circles - 2 * k;
      out[exp] += sgn * binom[k];
      if (out[exp] == 0) out.erase(exp);
    }
  }
  return out;
}

inline Laurent euler_characteristic(const std::map<Bigrading, KhGroup>& kh) {
  Laurent out;
  for (auto& [ij, g] : kh) {
    if (!g.free) continue;
    out[ij.j] += (ij.i & 1) ? -g.free : g.free;
    if (out[ij.j] == 0) out.erase(ij.j);
  }
  return out;
}

} // namespace khsq
