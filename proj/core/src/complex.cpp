#include "khsq/complex.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace khsq {

Complex::Complex(const Diagram& d) : d_(d) {
  int n = d.n();
  if (n > 24)
    throw std::invalid_argument("diagram too large (more than 24 crossings)");
  res_.reserve(std::size_t{1} << n);
  for (Vertex u = 0; u < (Vertex{1} << n); ++u) res_.push_back(resolve(d, u));
  for (Vertex u = 0; u < (Vertex{1} << n); ++u) {
    int c = static_cast<int>(res_[u].circles.size());
    for (std::uint32_t lab = 0; lab < (std::uint32_t{1} << c); ++lab) {
      Generator g{u, lab};
      gens_[grading(g)].push_back(g);
    }
  }
  for (auto& [ij, v] : gens_) {
    std::sort(v.begin(), v.end());
    for (int p = 0; p < static_cast<int>(v.size()); ++p) pos_[v[p]] = p;
  }
}

Bigrading Complex::grading(const Generator& g) const {
  int n = d_.n(), nm = d_.n_minus();
  int w = popcount(g.u);
  int c = static_cast<int>(res_[g.u].circles.size());
  int p = std::popcount(g.labels);
  return {w - nm, n - 3 * nm + w + 2 * p - c};
}

const std::vector<Generator>& Complex::generators(Bigrading ij) const {
  static const std::vector<Generator> kEmpty;
  auto it = gens_.find(ij);
  return it == gens_.end() ? kEmpty : it->second;
}

int Complex::position(const Generator& g) const { return pos_.at(g); }

std::uint32_t Complex::transfer(Vertex v, Vertex w, std::uint32_t labels,
                                std::uint32_t removed_mask,
                                std::uint32_t set_bits) const {
  const auto& cv = res_[v].circles;
  const auto& rw = res_[w];
  std::uint32_t out = set_bits;
  for (int k = 0; k < static_cast<int>(cv.size()); ++k) {
    if ((removed_mask >> k) & 1) continue;
    // identify by any contained edge (min-edge identity)
    int e = std::countr_zero(cv[k].edge_mask);
    int k2 = rw.circle_of_edge(e);
    out |= ((labels >> k) & 1u) << k2;
  }
  return out;
}

std::vector<DiffTerm> Complex::differential(const Generator& g) const {
  std::vector<DiffTerm> out;
  const Diagram& d = d_;
  Vertex u = g.u;
  for (int i = 0; i < d.n(); ++i) {
    if ((u >> i) & 1) continue;
    Vertex v = u | (Vertex{1} << i);
    const ResolutionConfig& ru = res_[u];
    const ResolutionConfig& rv = res_[v];
    int se = sign_s(u, v);
    int ka = ru.circle_of_strand(i, 0), kb = ru.circle_of_strand(i, 1);
    if (ka != kb) { // merge
      int z1 = std::min(ka, kb), z2 = std::max(ka, kb);
      // target circle: contains any edge of z1
      int e = std::countr_zero(ru.circles[z1].edge_mask);
      int z3 = rv.circle_of_edge(e);
      int l1 = (g.labels >> z1) & 1, l2 = (g.labels >> z2) & 1;
      std::uint32_t removed = (1u << z1) | (1u << z2);
      if (l1 == 1 && l2 == 1)
        out.push_back({{v, transfer(u, v, g.labels, removed, 1u << z3)}, se});
      else if (l1 != l2)
        out.push_back({{v, transfer(u, v, g.labels, removed, 0)}, se});
    } else { // split
      int z1 = ka;
      auto pairs1 = Diagram::smooth_pairs(1);
      int z2 = rv.circle_of_strand(i, std::min(pairs1[0][0], pairs1[0][1]));
      int z3 = rv.circle_of_strand(i, std::min(pairs1[1][0], pairs1[1][1]));
      if (z2 == z3) throw std::logic_error("split produced one circle");
      std::uint32_t removed = 1u << z1;
      if (((g.labels >> z1) & 1) == 0) {
        out.push_back({{v, transfer(u, v, g.labels, removed, 0)}, se});
      } else {
        out.push_back({{v, transfer(u, v, g.labels, removed, 1u << z2)}, se});
        out.push_back({{v, transfer(u, v, g.labels, removed, 1u << z3)}, se});
      }
    }
  }
  return out;
}

std::vector<Generator> Complex::between(const Generator& x,
                                        const Generator& y) const {
  std::vector<Generator> out;
  for (const DiffTerm& t1 : differential(y))
    for (const DiffTerm& t2 : differential(t1.target))
      if (t2.target == x) out.push_back(t1.target);
  return out;
}

std::vector<std::pair<Generator, Generator>>
Complex::ladybug_involution(const Generator& x, const Generator& y) const {
  auto bt = between(x, y);
  if (bt.empty())
    throw std::invalid_argument("ladybug_involution: empty between-set");
  if (bt.size() == 2) return {{bt[0], bt[1]}, {bt[1], bt[0]}};
  if (bt.size() != 4) throw std::logic_error("between-set size not in {0,2,4}");

  Vertex u = x.u, v = y.u;
  Vertex dd = u ^ v;
  int c1 = std::countr_zero(dd);
  int c2 = std::countr_zero(dd ^ (Vertex{1} << c1));
  const ResolutionConfig& rv = res_[v];
  auto lf = ladybug_data(d_, rv, c1, c2);
  if (!lf) throw std::logic_error("4-element between-set without ladybug config");

  int k1 = rv.circle_of_strand(c1, 0); // the circle Z1
  Vertex w_in = v | (Vertex{1} << lf->c_in);
  Vertex w_out = v | (Vertex{1} << lf->c_out);
  const ResolutionConfig& ri = res_[w_in];
  const ResolutionConfig& ro = res_[w_out];
  auto strand = [](int key) { return std::pair{key / 8, key % 8}; };
  auto circle_at = [&](const ResolutionConfig& r, int key) {
    auto [c, lo] = strand(key);
    return r.circle_of_strand(c, lo);
  };
  int kb = circle_at(ri, lf->b), kbp = circle_at(ri, lf->bp);
  int ka = circle_at(ro, lf->a), kap = circle_at(ro, lf->ap);
  if (kb == kbp || ka == kap) throw std::logic_error("ladybug split degenerate");
  auto gen_at = [&](Vertex w, int kplus) {
    return Generator{w, transfer(v, w, y.labels, 1u << k1, 1u << kplus)};
  };
  Generator z_in_b = gen_at(w_in, kb);
  Generator z_in_bp = gen_at(w_in, kbp);
  Generator z_out_a = gen_at(w_out, ka);
  Generator z_out_ap = gen_at(w_out, kap);
  // right-pair convention: b-circle <-> a'-circle, b'-circle <-> a-circle
  std::vector<std::pair<Generator, Generator>> out = {
      {z_in_b, z_out_ap}, {z_out_ap, z_in_b}, {z_in_bp, z_out_a},
      {z_out_a, z_in_bp}};
  // sanity: the four generators are exactly the between-set
  auto sorted = bt;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Generator> ours = {z_in_b, z_in_bp, z_out_a, z_out_ap};
  std::sort(ours.begin(), ours.end());
  if (sorted != ours)
    throw std::logic_error("ladybug generators do not match between-set");
  return out;
}

} // namespace khsq
