#include "khsq/pd.hpp"

#include <regex>
#include <stdexcept>

namespace khsq {

std::vector<Crossing> parse_pd(const std::string& text) {
  static const std::regex rx(
      R"(X\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]])");
  std::vector<Crossing> out;
  auto begin = std::sregex_iterator(text.begin(), text.end(), rx);
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    Crossing c;
    for (int k = 0; k < 4; ++k) c.e[k] = std::stoi((*it)[k + 1].str());
    out.push_back(c);
  }
  // Strict: after removing crossing tokens only whitespace and commas may
  // remain, and at least one crossing is required.
  std::string stripped = std::regex_replace(text, rx, "");
  if (stripped.find_first_not_of(" \t\n\r,") != std::string::npos)
    throw std::invalid_argument("malformed PD code: " + text);
  if (out.empty())
    throw std::invalid_argument("empty PD code");
  return out;
}

std::array<std::array<int, 2>, 2> Diagram::smooth_pairs(int bit) {
  if (bit == 0) return {{{0, 3}, {1, 2}}};
  return {{{0, 1}, {2, 3}}};
}

Diagram::Diagram(std::vector<Crossing> pd) : pd_(std::move(pd)) {
  build_edges();
  build_signs();
  build_components();
  build_faces();
}

void Diagram::build_edges() {
  std::map<int, std::vector<int>> occ; // label -> darts
  for (int c = 0; c < n(); ++c)
    for (int s = 0; s < 4; ++s) occ[pd_[c].e[s]].push_back(4 * c + s);
  for (auto& [lab, darts] : occ)
    if (darts.size() != 2)
      throw std::invalid_argument("PD edge label " + std::to_string(lab) +
                                  " occurs " + std::to_string(darts.size()) +
                                  " times (expected 2)");
  alpha_.assign(4 * n(), -1);
  for (auto& [lab, darts] : occ) {
    int id = static_cast<int>(edge_labels_.size());
    edge_ids_[lab] = id;
    edge_labels_.push_back(lab);
    edge_darts_.push_back({darts[0], darts[1]});
    alpha_[darts[0]] = darts[1];
    alpha_[darts[1]] = darts[0];
  }
}

bool Diagram::over_enters_b(int c) const {
  int b = pd_[c].e[1], d = pd_[c].e[3];
  if (d == b + 1) return true;
  if (b == d + 1) return false;
  return b > d; // wrap from the component's largest label to its smallest
}

void Diagram::build_signs() {
  // Decide per crossing whether the over-strand enters at slot 1 (edge b) by
  // global propagation: every edge must have exactly one incoming and one
  // outgoing dart. The under-strand fixes slot 0 incoming and slot 2
  // outgoing; over-slot directions follow by matching across edges. The
  // label rule (d = b+1 / b = d+1 / wrap) only breaks ties for crossings the
  // propagation leaves unconstrained, where it is unambiguous.
  signs_.assign(n(), 0);
  n_minus_ = 0;
  // incoming-ness of dart (c,s): s=0 -> in, s=2 -> out,
  // s=1 -> in iff over enters b, s=3 -> out iff over enters b
  std::vector<int> enters_b(n(), -1); // -1 unknown
  auto propagate = [&](int c0, bool val) {
    std::vector<int> stack;
    enters_b[c0] = val;
    stack.push_back(c0);
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        int d = 4 * c + s;
        bool in;
        if (s == 0) in = true;
        else if (s == 2) in = false;
        else if (s == 1) in = enters_b[c];
        else in = !enters_b[c];
        int d2 = alpha_[d];
        int c2 = d2 / 4, s2 = d2 % 4;
        // the other dart of this edge must have the opposite direction
        bool in2 = !in;
        if (s2 == 0 || s2 == 2) {
          bool fixed = (s2 == 0);
          if (fixed != in2)
            throw std::invalid_argument(
                "PD labels do not admit a consistent orientation");
          continue;
        }
        bool want = (s2 == 1) ? in2 : !in2; // enters_b value forced at c2
        if (enters_b[c2] == -1) {
          enters_b[c2] = want;
          stack.push_back(c2);
        } else if (enters_b[c2] != static_cast<int>(want)) {
          throw std::invalid_argument(
              "PD labels do not admit a consistent orientation");
        }
      }
    }
  };
  // Seed from crossings adjacent (through an edge) to an under-strand slot.
  for (int c = 0; c < n(); ++c)
    for (int s : {0, 2}) {
      int d2 = alpha_[4 * c + s];
      int c2 = d2 / 4, s2 = d2 % 4;
      if (s2 != 1 && s2 != 3) continue;
      if (enters_b[c2] != -1) continue;
      bool in = (s == 0); // direction of our dart
      bool in2 = !in;
      bool want = (s2 == 1) ? in2 : !in2;
      propagate(c2, want);
    }
  for (int c = 0; c < n(); ++c)
    if (enters_b[c] == -1) propagate(c, over_enters_b(c));
  for (int c = 0; c < n(); ++c) {
    signs_[c] = enters_b[c] ? +1 : -1;
    if (signs_[c] < 0) ++n_minus_;
  }
}

void Diagram::build_components() {
  // Head dart of each edge: the dart where the edge is incoming.
  std::map<int, int> head; // label -> dart
  for (int c = 0; c < n(); ++c)
    for (int s = 0; s < 4; ++s) {
      bool in = (s == 0) || (s == 1 && signs_[c] > 0) ||
                (s == 3 && signs_[c] < 0);
      if (in) head[pd_[c].e[s]] = 4 * c + s;
    }
  std::map<int, bool> seen;
  for (auto& [lab, id] : edge_ids_) seen[lab] = false;
  for (auto& [start, was] : seen) {
    if (was) continue;
    std::vector<int> comp;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      comp.push_back(cur);
      auto it = head.find(cur);
      if (it == head.end())
        throw std::invalid_argument(
            "PD labels do not follow orientation at edge " +
            std::to_string(cur));
      int c = it->second / 4, s = it->second % 4;
      // leave the crossing along the same strand
      cur = pd_[c].e[s == 0 ? 2 : (s == 1 ? 3 : 1)];
    }
    components_.push_back(std::move(comp));
  }
}

void Diagram::build_faces() {
  dart_face_.assign(4 * n(), -1);
  corner_face_.assign(4 * n(), -1);
  num_faces_ = 0;
  for (int d0 = 0; d0 < 4 * n(); ++d0) {
    if (dart_face_[d0] >= 0) continue;
    int fid = num_faces_++;
    int d = d0;
    while (dart_face_[d] < 0) {
      dart_face_[d] = fid;
      int a = alpha_[d];
      corner_face_[a] = fid; // corner between slots s and s+1 at alpha's crossing
      d = (a / 4) * 4 + (a % 4 + 1) % 4;
    }
  }
  if (n() > 0 && num_faces_ != n() + 2)
    throw std::invalid_argument("PD code is not planar (Euler check failed)");
  outer_ = n() > 0 ? corner_face_[0] : 0;
}

} // namespace khsq
