#include "khsq/homotopy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace khsq {

namespace {

std::vector<BitVec> nonzero(const std::vector<BitVec>& v) {
  std::vector<BitVec> out;
  for (const auto& x : v)
    if (x.any()) out.push_back(x);
  return out;
}

} // namespace

DecompositionCounts decompose_quiver(const Quiver& q) {
  int rf = f2_rank_of(q.f, q.d2);
  int rg = f2_rank_of(q.g, q.d3);
  int r1 = f2_rank_of(q.s, q.d3);
  // g f = 0 check
  for (int k = 0; k < q.d1; ++k) {
    BitVec gf(q.d3);
    for (int t = 0; t < q.d2; ++t)
      if (q.f[k].get(t)) gf ^= q.g[t];
    if (gf.any()) throw std::logic_error("quiver with g f != 0");
  }
  BitMatrix fm(q.d2, q.d1);
  for (int k = 0; k < q.d1; ++k) fm.col(k) = q.f[k];
  std::vector<BitVec> sk; // s restricted to ker f
  for (const BitVec& kv : fm.kernel()) {
    BitVec v(q.d3);
    for (int t = 0; t < q.d1; ++t)
      if (kv.get(t)) v ^= q.s[t];
    sk.push_back(v);
  }
  int r2 = f2_rank_of(sk, q.d3);
  int r3 = f2_intersection_dim(nonzero(q.g), nonzero(q.s), q.d3);
  int r4 = f2_intersection_dim(nonzero(q.g), nonzero(sk), q.d3);

  DecompositionCounts c;
  c.s1 = q.d1 - rf - r2;
  c.s2 = q.d2 - rf - rg;
  c.s3 = q.d3 - rg - r1 + r3;
  c.p1 = rf - r1 + r2;
  c.p2 = rg - r3;
  c.x1 = r2 - r4;
  c.x2 = r1 - r2 - r3 + r4;
  c.x3 = r4;
  c.x4 = r3 - r4;
  for (int v : {c.s1, c.s2, c.s3, c.p1, c.p2, c.x1, c.x2, c.x3, c.x4})
    if (v < 0) {
      std::ostringstream os;
      os << "negative decomposition count: d=(" << q.d1 << "," << q.d2 << ","
         << q.d3 << ") r=(" << rf << "," << rg << "," << r1 << "," << r2 << ","
         << r3 << "," << r4 << ")";
      throw std::logic_error(os.str());
    }
  return c;
}

Width3Report check_width3(const std::map<Bigrading, KhGroup>& kh) {
  Width3Report rep;
  if (kh.empty()) {
    rep.failure = "empty homology";
    return rep;
  }
  int sigma = 0;
  bool first = true;
  for (const auto& [ij, g] : kh) {
    int d = 2 * ij.i - ij.j;
    if (first || d < sigma) sigma = d;
    first = false;
  }
  for (const auto& [ij, g] : kh) {
    int d = 2 * ij.i - ij.j;
    if (d != sigma && d != sigma + 2 && d != sigma + 4) {
      rep.failure = "support off the three diagonals";
      return rep;
    }
    for (auto t : g.torsion) {
      if (t != 2) {
        rep.failure = "torsion of order other than 2";
        return rep;
      }
      if (d == sigma) {
        rep.failure = "torsion on the lowest diagonal";
        return rep;
      }
    }
  }
  rep.ok = true;
  rep.sigma = sigma;
  return rep;
}

std::string summand_text(const WedgeSummand& s) {
  std::ostringstream os;
  switch (s.kind) {
    case WedgeSummand::Sphere: os << "S^" << s.k; break;
    case WedgeSummand::RP2: os << "Σ^" << s.k << " RP2"; break;
    case WedgeSummand::CP2: os << "Σ^" << s.k << " CP2"; break;
    case WedgeSummand::RP5modRP2: os << "Σ^" << s.k << " (RP5/RP2)"; break;
    case WedgeSummand::RP4modRP1: os << "Σ^" << s.k << " (RP4/RP1)"; break;
    case WedgeSummand::SmashRP2: os << "Σ^" << s.k << " (RP2^RP2)"; break;
  }
  return os.str();
}

std::string WedgeExpr::text() const {
  if (summands.empty()) return "*";
  std::string out;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    if (k) out += " v ";
    out += summand_text(summands[k]);
  }
  return out;
}

std::map<int, int> wedge_cohomology(const WedgeExpr& w) {
  std::map<int, int> h;
  for (const auto& s : w.summands) {
    switch (s.kind) {
      case WedgeSummand::Sphere: h[s.k] += 1; break;
      case WedgeSummand::RP2:
        h[s.k + 1] += 1;
        h[s.k + 2] += 1;
        break;
      case WedgeSummand::CP2:
        h[s.k + 2] += 1;
        h[s.k + 4] += 1;
        break;
      case WedgeSummand::RP5modRP2:
        for (int d : {3, 4, 5}) h[s.k + d] += 1;
        break;
      case WedgeSummand::RP4modRP1:
        for (int d : {2, 3, 4}) h[s.k + d] += 1;
        break;
      case WedgeSummand::SmashRP2:
        h[s.k + 2] += 1;
        h[s.k + 3] += 2;
        h[s.k + 4] += 1;
        break;
    }
  }
  return h;
}

int f2_dim(const std::map<Bigrading, KhGroup>& kh, Bigrading ij) {
  int d = 0;
  auto here = kh.find(ij);
  if (here != kh.end())
    d += here->second.free + static_cast<int>(here->second.torsion.size());
  auto up = kh.find({ij.i + 1, ij.j});
  if (up != kh.end()) d += static_cast<int>(up->second.torsion.size());
  return d;
}

WedgeExpr homotopy_type(const std::map<Bigrading, KhGroup>& kh,
                        const SqMaps& sq, int j, int sigma) {
  if ((j + sigma) % 2 != 0)
    throw std::logic_error("sigma and quantum grading of opposite parity");
  int i = (j + sigma) / 2;
  Quiver q;
  q.d1 = f2_dim(kh, {i, j});
  q.d2 = f2_dim(kh, {i + 1, j});
  q.d3 = f2_dim(kh, {i + 2, j});
  q.f.assign(q.d1, BitVec(q.d2));
  q.g.assign(q.d2, BitVec(q.d3));
  q.s.assign(q.d1, BitVec(q.d3));
  auto lvl = sq.find(i);
  if (lvl != sq.end()) {
    if (lvl->second.dimA != q.d1 || lvl->second.dimB != q.d2 ||
        lvl->second.dimC != q.d3)
      throw std::logic_error("Sq-map dimensions disagree with the Kh_Z table");
    q.f = lvl->second.sq1;
    q.s = lvl->second.sq2;
  } else if (q.d1 != 0) {
    throw std::logic_error("missing Sq data at a nonzero level");
  }
  auto nxt = sq.find(i + 1);
  if (nxt != sq.end()) {
    if (nxt->second.dimA != q.d2 || nxt->second.dimB != q.d3)
      throw std::logic_error("Sq-map dimensions disagree with the Kh_Z table");
    q.g = nxt->second.sq1;
  } else if (q.d2 != 0) {
    throw std::logic_error("missing Sq data at a nonzero level");
  }
  DecompositionCounts c = decompose_quiver(q);
  WedgeExpr w;
  auto add = [&](WedgeSummand::Kind kind, int k, int count) {
    for (int t = 0; t < count; ++t) w.summands.push_back({kind, k});
  };
  add(WedgeSummand::Sphere, i, c.s1);
  add(WedgeSummand::Sphere, i + 1, c.s2);
  add(WedgeSummand::Sphere, i + 2, c.s3);
  add(WedgeSummand::RP2, i - 1, c.p1);
  add(WedgeSummand::RP2, i, c.p2);
  add(WedgeSummand::CP2, i - 2, c.x1);
  add(WedgeSummand::RP5modRP2, i - 3, c.x2);
  add(WedgeSummand::RP4modRP1, i - 2, c.x3);
  add(WedgeSummand::SmashRP2, i - 2, c.x4);
  std::sort(w.summands.begin(), w.summands.end(),
            [](const WedgeSummand& a, const WedgeSummand& b) {
              return std::pair(a.k, static_cast<int>(a.kind)) <
                     std::pair(b.k, static_cast<int>(b.kind));
            });
  return w;
}

} // namespace khsq
