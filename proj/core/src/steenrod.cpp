#include "khsq/steenrod.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace khsq {

namespace {

int lam_partner(const SquareInput& in, int x, int y, int z) {
  auto it = in.lam.find({x, y});
  if (it == in.lam.end()) throw std::logic_error("missing lambda entry");
  for (auto& [a, b] : it->second)
    if (a == z) return b;
  throw std::logic_error("z not in lambda domain");
}

} // namespace

std::vector<int> SquareInput::between(int x, int y) const {
  std::vector<int> out;
  for (auto& [z, s] : dAB[y])
    for (auto& [xx, s2] : dBC[z])
      if (xx == x) out.push_back(z);
  return out;
}

int SquareInput::sAB(int z, int y) const {
  for (auto& [zz, s] : dAB[y])
    if (zz == z) return s;
  throw std::logic_error("missing A->B incidence");
}

int SquareInput::sBC(int x, int z) const {
  for (auto& [xx, s] : dBC[z])
    if (xx == x) return s;
  throw std::logic_error("missing B->C incidence");
}

void SquareInput::validate() const {
  for (int y = 0; y < nA; ++y)
    for (int x = 0; x < nC; ++x) {
      auto bt = between(x, y);
      if (bt.size() % 2) throw std::logic_error("odd between-set");
      if (bt.empty()) continue;
      auto it = lam.find({x, y});
      if (it == lam.end()) throw std::logic_error("missing involution");
      if (it->second.size() != bt.size())
        throw std::logic_error("involution domain mismatch");
      for (int z : bt) {
        int zp = lam_partner(*this, x, y, z);
        if (zp == z || lam_partner(*this, x, y, zp) != z)
          throw std::logic_error("lambda not a fixed-point-free involution");
        if (std::find(bt.begin(), bt.end(), zp) == bt.end())
          throw std::logic_error("lambda leaves between-set");
        int tot = (sBC(x, z) + sAB(z, y) + sBC(x, zp) + sAB(zp, y)) & 1;
        if (tot != 1) throw std::logic_error("ladybug-changes-sign fails");
      }
      if (!frame.count({x, y})) throw std::logic_error("missing frame value");
    }
}

BoundaryMatching make_boundary_matching(const SquareInput& in, const BitVec& c,
                                        std::uint64_t seed) {
  std::vector<std::vector<int>> pre(in.nB);
  for (int y = 0; y < in.nA; ++y) {
    if (!c.get(y)) continue;
    for (auto& [z, s] : in.dAB[y]) pre[z].push_back(y);
  }
  BoundaryMatching m;
  m.mu.resize(in.nB);
  m.h.resize(in.nB);
  for (int z = 0; z < in.nB; ++z) {
    auto& p = pre[z];
    if (p.size() % 2) throw std::logic_error("odd Pre-set for a cycle");
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (std::uint64_t(z) + 1)));
    if (seed != 0)
      for (int k = static_cast<int>(p.size()) - 1; k > 0; --k)
        std::swap(p[k], p[rng() % (k + 1)]);
    for (std::size_t k = 0; k + 1 < p.size(); k += 2) {
      int y1 = p[k], y2 = p[k + 1];
      m.mu[z][y1] = y2;
      m.mu[z][y2] = y1;
      if (in.sAB(z, y1) == in.sAB(z, y2)) {
        if (seed != 0 && (rng() & 1)) std::swap(y1, y2);
        m.h[z][y1] = 0;
        m.h[z][y2] = 1;
      } else {
        m.h[z][y1] = 0;
        m.h[z][y2] = 0;
      }
    }
  }
  return m;
}

BitVec sq1_chain(const SquareInput& in, const BitVec& c,
                 const BoundaryMatching& m) {
  BitVec out(in.nB);
  for (int z = 0; z < in.nB; ++z) {
    int tot = 0;
    for (auto& [y, hv] : m.h[z]) tot ^= hv;
    if (tot) out.flip(z);
  }
  return out;
}

MatchGraph build_graph(const SquareInput& in, const BitVec& c,
                       const BoundaryMatching& m, int x) {
  MatchGraph g;
  std::map<std::pair<int, int>, int> vid;
  for (int y = 0; y < in.nA; ++y) {
    if (!c.get(y)) continue;
    for (auto& [z, s] : in.dAB[y])
      for (auto& [xx, s2] : in.dBC[z])
        if (xx == x) {
          vid[{z, y}] = static_cast<int>(g.verts.size());
          g.verts.push_back({z, y});
        }
  }
  for (auto& [zy, a] : vid) {
    auto [z, y] = zy;
    int zp = lam_partner(in, x, y, z);
    int b = vid.at({zp, y});
    if (a < b) g.e1.push_back({a, b, in.frame.at({x, y})});
  }
  for (auto& [zy, a] : vid) {
    auto [z, y] = zy;
    int yp = m.mu[z].at(y);
    int b = vid.at({z, yp});
    int hy = m.h[z].at(y), hyp = m.h[z].at(yp);
    if (hy == hyp) {
      if (a < b) g.e2.push_back({a, b, false});
    } else if (hy == 0) {
      g.e2.push_back({a, b, true});
    }
  }
  return g;
}

GraphCounts graph_counts(const MatchGraph& g) {
  int n = static_cast<int>(g.verts.size());
  // adjacency: per vertex one e-1 edge (partner, label) and one e-2 edge
  // (partner, orient: 0 none, +1 out of vertex, -1 into vertex)
  std::vector<std::pair<int, int>> a1(n, {-1, 0}), a2(n, {-1, 0});
  for (auto& e : g.e1) {
    if (a1[e.a].first != -1 || a1[e.b].first != -1)
      throw std::invalid_argument("vertex with two e-1 edges");
    a1[e.a] = {e.b, e.label};
    a1[e.b] = {e.a, e.label};
  }
  for (auto& e : g.e2) {
    if (a2[e.a].first != -1 || a2[e.b].first != -1)
      throw std::invalid_argument("vertex with two e-2 edges");
    a2[e.a] = {e.b, e.oriented ? +1 : 0};
    a2[e.b] = {e.a, e.oriented ? -1 : 0};
  }
  for (int v = 0; v < n; ++v)
    if (a1[v].first < 0 || a2[v].first < 0)
      throw std::invalid_argument("vertex of degree != 2");
  GraphCounts out;
  std::vector<bool> seen(n, false);
  for (int v0 = 0; v0 < n; ++v0) {
    if (seen[v0]) continue;
    ++out.components;
    int cur = v0;
    bool use_e1 = true;
    int oriented = 0, agree = 0;
    do {
      seen[cur] = true;
      auto [w, tag] = use_e1 ? a1[cur] : a2[cur];
      if (use_e1) {
        out.f_count ^= tag & 1;
      } else if (tag != 0) {
        ++oriented;
        if (tag > 0) ++agree; // edge points cur -> w, with the traversal
      }
      cur = w;
      use_e1 = !use_e1;
    } while (!(cur == v0 && use_e1));
    if (oriented % 2) throw std::logic_error("odd oriented edges in component");
    out.g_count = (out.g_count + agree) & 1;
  }
  return out;
}

BitVec sq2_chain(const SquareInput& in, const BitVec& c,
                 const BoundaryMatching& m) {
  BitVec out(in.nC);
  for (int x = 0; x < in.nC; ++x) {
    MatchGraph g = build_graph(in, c, m, x);
    if (g.verts.empty()) continue;
    GraphCounts gc = graph_counts(g);
    if ((gc.components + gc.f_count + gc.g_count) & 1) out.flip(x);
  }
  return out;
}

SquareInput khovanov_square_input(const Complex& c, Bigrading ij) {
  const auto& A = c.generators(ij);
  const auto& B = c.generators({ij.i + 1, ij.j});
  const auto& C = c.generators({ij.i + 2, ij.j});
  SquareInput in;
  in.nA = static_cast<int>(A.size());
  in.nB = static_cast<int>(B.size());
  in.nC = static_cast<int>(C.size());
  in.dAB.resize(in.nA);
  in.dBC.resize(in.nB);
  for (int y = 0; y < in.nA; ++y)
    for (const auto& t : c.differential(A[y]))
      in.dAB[y].push_back({c.position(t.target), t.sign_exp & 1});
  for (int z = 0; z < in.nB; ++z)
    for (const auto& t : c.differential(B[z]))
      in.dBC[z].push_back({c.position(t.target), t.sign_exp & 1});
  for (int y = 0; y < in.nA; ++y) {
    std::map<int, int> seen_x; // x -> between-set size (for sanity)
    for (auto& [z, s1] : in.dAB[y])
      for (auto& [x, s2] : in.dBC[z]) ++seen_x[x];
    for (auto& [x, cnt] : seen_x) {
      in.frame[{x, y}] = frame_f(A[y].u, C[x].u);
      auto pairs = c.ladybug_involution(C[x], A[y]);
      std::vector<std::pair<int, int>> lam;
      for (auto& [za, zb] : pairs)
        lam.push_back({c.position(za), c.position(zb)});
      in.lam[{x, y}] = std::move(lam);
    }
  }
  in.validate();
  return in;
}

SqMaps sq_maps(const Complex& c, int j, std::uint64_t seed) {
  std::map<int, F2Homology> bases;
  auto basis = [&](int i) -> F2Homology& {
    auto it = bases.find(i);
    if (it == bases.end())
      it = bases.try_emplace(i, c, Bigrading{i, j}).first;
    return it->second;
  };
  SqMaps out;
  for (const auto& [ij, gens] : c.all_generators()) {
    if (ij.j != j) continue;
    int i = ij.i;
    F2Homology& bA = basis(i);
    if (bA.dim() == 0) continue;
    F2Homology& bB = basis(i + 1);
    F2Homology& bC = basis(i + 2);
    SquareInput in = khovanov_square_input(c, {i, j});
    SqLevel lvl;
    lvl.dimA = bA.dim();
    lvl.dimB = bB.dim();
    lvl.dimC = bC.dim();
    for (const BitVec& rep : bA.representatives()) {
      BoundaryMatching m = make_boundary_matching(in, rep, seed);
      lvl.sq1.push_back(bB.project(sq1_chain(in, rep, m)));
      lvl.sq2.push_back(bC.project(sq2_chain(in, rep, m)));
    }
    out[i] = std::move(lvl);
  }
  return out;
}

std::array<int, 4> st_invariant(const SqMaps& m, int i) {
  auto it = m.find(i);
  if (it == m.end()) return {0, 0, 0, 0};
  const SqLevel& lvl = it->second;
  int dA = lvl.dimA, dB = lvl.dimB, dC = lvl.dimC;
  int r1 = f2_rank_of(lvl.sq2, dC);
  BitMatrix sq1m(dB, dA);
  for (int k = 0; k < dA; ++k) sq1m.col(k) = lvl.sq1[k];
  std::vector<BitVec> sq2k;
  for (const BitVec& kv : sq1m.kernel()) {
    BitVec v(dC);
    for (int t = 0; t < dA; ++t)
      if (kv.get(t)) v ^= lvl.sq2[t];
    sq2k.push_back(v);
  }
  int r2 = f2_rank_of(sq2k, dC);
  std::vector<BitVec> im1;
  auto next = m.find(i + 1);
  if (next != m.end())
    for (const BitVec& col : next->second.sq1)
      if (col.any()) im1.push_back(col);
  int r3 = f2_intersection_dim(im1, lvl.sq2, dC);
  int r4 = f2_intersection_dim(im1, sq2k, dC);
  return {r2 - r4, r1 - r2 - r3 + r4, r4, r3 - r4};
}

} // namespace khsq
