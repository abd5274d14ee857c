#pragma once
// Planar diagram (PD) codes and the planar data derived from them.
//
// Conventions (fixed once, used everywhere):
//  - A crossing X(a,b,c,d) lists the four incident edge labels starting at the
//    incoming under-strand edge a; b,c,d follow in the rotational order of the
//    PD convention. The under-strand runs a -> c. The over-strand runs b -> d
//    when d = b+1 (or b > d, a wrap), else d -> b.
//  - Crossing sign is +1 iff the over-strand enters at slot 1 (edge b).
//  - Faces of the 4-valent graph are orbits of dart -> rotate(partner(dart)).

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace khsq {

using Vertex = std::uint32_t; // bit i = resolution chosen at crossing i

struct Crossing {
  std::array<int, 4> e; // edge labels at slots 0..3
};

// Parse "X(a,b,c,d) ..." or "X[a,b,c,d], ..." into crossings.
// Throws std::invalid_argument on malformed input.
std::vector<Crossing> parse_pd(const std::string& text);

// Dart = 4*crossing + slot.
struct Diagram {
  explicit Diagram(std::vector<Crossing> pd);

  int n() const { return static_cast<int>(pd_.size()); }
  int n_minus() const { return n_minus_; }
  int n_edges() const { return static_cast<int>(edge_ids_.size()); }
  const std::vector<Crossing>& crossings() const { return pd_; }
  int sign(int c) const { return signs_[c]; }

  // Dense edge index for a PD edge label.
  int edge_index(int label) const { return edge_ids_.at(label); }
  int edge_label(int index) const { return edge_labels_[index]; }

  // The dart at the other occurrence of the edge incident to dart d.
  int alpha(int d) const { return alpha_[d]; }
  // Face id containing a dart; faces number n+2 (Euler check enforced).
  int face_of_dart(int d) const { return dart_face_[d]; }
  // Face id of the corner between slots s and s+1 of crossing c.
  int corner_face(int c, int s) const { return corner_face_[4 * c + s]; }
  int num_faces() const { return num_faces_; }
  int outer_face() const { return outer_; } // canonical: face at corner (0,0)
  // Orientation-respecting components as sequences of edge labels.
  const std::vector<std::vector<int>>& components() const { return components_; }

  // Smoothing convention: resolution 0 joins slots (0,3),(1,2); 1 joins (0,1),(2,3).
  static std::array<std::array<int, 2>, 2> smooth_pairs(int bit);

private:
  std::vector<Crossing> pd_;
  std::vector<int> signs_;
  int n_minus_ = 0;
  std::map<int, int> edge_ids_;
  std::vector<int> edge_labels_;
  std::vector<std::array<int, 2>> edge_darts_; // per edge index: its two darts
  std::vector<int> alpha_, dart_face_, corner_face_;
  int num_faces_ = 0, outer_ = 0;
  std::vector<std::vector<int>> components_;

  void build_edges();
  void build_signs();
  void build_components();
  void build_faces();
  bool over_enters_b(int c) const;

public:
  const std::array<int, 2>& edge_darts(int edge_index) const {
    return edge_darts_[edge_index];
  }
};

} // namespace khsq
