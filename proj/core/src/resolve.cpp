#include "khsq/resolve.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace khsq {

namespace {

// BFS side parity: crossing an edge of the circle flips inside/outside.
std::vector<std::uint8_t> circle_sides(const Diagram& d, std::uint64_t edge_mask) {
  int nf = d.num_faces();
  std::vector<int> side(nf, -1);
  std::vector<int> stack{d.outer_face()};
  side[d.outer_face()] = 0;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int e = 0; e < d.n_edges(); ++e) {
      auto& darts = d.edge_darts(e);
      int f1 = d.face_of_dart(darts[0]), f2 = d.face_of_dart(darts[1]);
      if (f1 != f && f2 != f) continue;
      int g = (f1 == f) ? f2 : f1;
      int flip = (edge_mask >> e) & 1;
      int sg = side[f] ^ flip;
      if (side[g] < 0) {
        side[g] = sg;
        stack.push_back(g);
      } else if (side[g] != sg) {
        throw std::logic_error("inconsistent side parity (non-planar data)");
      }
    }
  }
  return std::vector<std::uint8_t>(side.begin(), side.end());
}

} // namespace

ResolutionConfig resolve(const Diagram& d, Vertex u) {
  ResolutionConfig cfg;
  cfg.vertex = u;
  int n = d.n();
  // partner[dart] under the chosen smoothing at each crossing
  std::vector<int> partner(4 * n, -1);
  for (int c = 0; c < n; ++c) {
    auto pairs = Diagram::smooth_pairs((u >> c) & 1);
    for (auto& pr : pairs) {
      partner[4 * c + pr[0]] = 4 * c + pr[1];
      partner[4 * c + pr[1]] = 4 * c + pr[0];
    }
  }
  cfg.edge_circle.assign(d.n_edges(), -1);
  std::vector<bool> used(d.n_edges(), false);
  for (int e0 = 0; e0 < d.n_edges(); ++e0) {
    if (used[e0]) continue;
    Circle circ;
    int cur = e0;                       // dense edge index
    int dart = d.edge_darts(e0)[1];    // arrival dart of the first edge
    int start_e = cur, start_dart = dart;
    do {
      used[cur] = true;
      circ.edge_mask |= std::uint64_t{1} << cur;
      circ.items.push_back({CircleItem::Edge, d.edge_label(cur), dart, 0});
      int c = dart / 4, s = dart % 4;
      int p = partner[4 * c + s];
      circ.items.push_back({CircleItem::Strand, c, s, p % 4});
      int nd = d.alpha(p);
      cur = d.edge_index(d.crossings()[p / 4].e[p % 4]);
      dart = nd;
    } while (!(cur == start_e && dart == start_dart));
    circ.min_edge_label = d.edge_label(e0);
    for (int e = 0; e < d.n_edges(); ++e)
      if ((circ.edge_mask >> e) & 1)
        circ.min_edge_label = std::min(circ.min_edge_label, d.edge_label(e));
    circ.side = circle_sides(d, circ.edge_mask);
    // orient counterclockwise: left corner of the arrival dart must be inside
    const CircleItem& it0 = circ.items[0];
    int ac = it0.b / 4, as = it0.b % 4;
    int left = d.corner_face(ac, (as + 3) % 4);
    if (circ.side[left] != 1) {
      std::vector<CircleItem> rev;
      rev.reserve(circ.items.size());
      for (auto it = circ.items.rbegin(); it != circ.items.rend(); ++it) {
        if (it->kind == CircleItem::Edge) {
          int other = d.alpha(it->b);
          rev.push_back({CircleItem::Edge, it->a, other, 0});
        } else {
          rev.push_back({CircleItem::Strand, it->a, it->c, it->b});
        }
      }
      circ.items = std::move(rev);
    }
    cfg.circles.push_back(std::move(circ));
  }
  std::sort(cfg.circles.begin(), cfg.circles.end(),
            [](const Circle& x, const Circle& y) {
              return x.min_edge_label < y.min_edge_label;
            });
  for (int k = 0; k < static_cast<int>(cfg.circles.size()); ++k) {
    const Circle& circ = cfg.circles[k];
    for (int e = 0; e < d.n_edges(); ++e)
      if ((circ.edge_mask >> e) & 1) cfg.edge_circle[e] = k;
    for (const auto& it : circ.items)
      if (it.kind == CircleItem::Strand)
        cfg.strand_circle[it.a * 8 + std::min(it.b, it.c)] = k;
  }
  return cfg;
}

SurgeryResult surgery(const Diagram& d, const ResolutionConfig& cfg, int c) {
  if (((cfg.vertex >> c) & 1) != 0)
    throw std::invalid_argument("surgery arc only exists at a 0-resolved crossing");
  SurgeryResult r;
  r.before_circles = static_cast<int>(cfg.circles.size());
  auto pairs = Diagram::smooth_pairs(0);
  int k1 = cfg.circle_of_strand(c, std::min(pairs[0][0], pairs[0][1]));
  int k2 = cfg.circle_of_strand(c, std::min(pairs[1][0], pairs[1][1]));
  r.split = (k1 == k2);
  r.after_circles = r.before_circles + (r.split ? 1 : -1);
  return r;
}

std::optional<LadybugFrame> ladybug_data(const Diagram& d,
                                         const ResolutionConfig& cfg, int c1,
                                         int c2) {
  if (c1 == c2) throw std::invalid_argument("ladybug_data needs distinct arcs");
  for (int c : {c1, c2})
    if (((cfg.vertex >> c) & 1) != 0)
      throw std::invalid_argument("arc crossing is not 0-resolved");
  // all four strands on one circle?
  int k = cfg.circle_of_strand(c1, 0);
  if (cfg.circle_of_strand(c1, 1) != k || cfg.circle_of_strand(c2, 0) != k ||
      cfg.circle_of_strand(c2, 1) != k)
    return std::nullopt;
  const Circle& z1 = cfg.circles[k];
  // endpoint strands of the two arcs in cyclic (CCW) traversal order
  std::vector<std::pair<int, int>> seq; // (crossing, strand key)
  for (const auto& it : z1.items)
    if (it.kind == CircleItem::Strand && (it.a == c1 || it.a == c2))
      seq.push_back({it.a, it.a * 8 + std::min(it.b, it.c)});
  assert(seq.size() == 4);
  if (seq[0].first == seq[1].first || seq[1].first == seq[2].first)
    return std::nullopt; // endpoints not linked
  // inside/outside of each arc: the 0-smoothing arc lives in the face at
  // corners (c,0) and (c,2) (the middle band of the smoothed crossing)
  auto arc_side = [&](int c) {
    int s0 = z1.side[d.corner_face(c, 0)];
    int s2 = z1.side[d.corner_face(c, 2)];
    if (s0 != s2) throw std::logic_error("arc straddles the circle");
    return s0;
  };
  int side1 = arc_side(c1), side2 = arc_side(c2);
  if (side1 == side2) throw std::logic_error("linked arcs on the same side");
  LadybugFrame lf;
  lf.c_in = side1 ? c1 : c2;
  lf.c_out = side1 ? c2 : c1;
  int r = (seq[0].first == lf.c_in) ? 0 : 1;
  lf.a = seq[r].second;
  lf.b = seq[(r + 1) % 4].second;
  lf.ap = seq[(r + 2) % 4].second;
  lf.bp = seq[(r + 3) % 4].second;
  return lf;
}

} // namespace khsq
