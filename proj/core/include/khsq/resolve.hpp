#pragma once
// Complete resolutions at cube vertices: circles with planar traversal data,
// in/out sides per face, and surgery-arc queries (inside/outside, ladybug).

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "khsq/pd.hpp"

namespace khsq {

struct CircleItem {
  // Either an edge traversed (kind=Edge: edge label, arrival dart) or a
  // smoothing strand at a crossing (kind=Strand: crossing, slot_from, slot_to).
  enum Kind : std::uint8_t { Edge, Strand } kind;
  int a = 0, b = 0, c = 0;
};

struct Circle {
  std::uint64_t edge_mask = 0;   // dense edge indices
  int min_edge_label = 0;        // canonical sort key
  std::vector<CircleItem> items; // cyclic, oriented counterclockwise
  std::vector<std::uint8_t> side; // per face id: 1 = inside this circle
};

struct ResolutionConfig {
  Vertex vertex = 0;
  std::vector<Circle> circles; // sorted by min edge label
  // circle index containing a given strand: key = crossing*8 + min(slot pair)
  std::unordered_map<int, int> strand_circle;
  // circle index containing a given edge (dense index)
  std::vector<int> edge_circle;

  int circle_of_edge(int edge_index) const { return edge_circle[edge_index]; }
  int circle_of_strand(int crossing, int slot_lo) const {
    return strand_circle.at(crossing * 8 + slot_lo);
  }
};

// Resolve the diagram at cube vertex u.
ResolutionConfig resolve(const Diagram& d, Vertex u);

struct SurgeryResult {
  bool split = false; // split iff both endpoints on one circle
  int before_circles = 0, after_circles = 0;
};

// Surgery along the arc at 0-resolved crossing 'c' of config at u.
SurgeryResult surgery(const Diagram& d, const ResolutionConfig& cfg, int c);

struct LadybugFrame {
  int c_in = 0, c_out = 0; // inside / outside arcs (by crossing index)
  // CCW endpoint order (a, b, a', b') as strand keys (crossing*8 + slot_lo);
  // a, a' belong to c_in; b, b' to c_out.
  int a = 0, b = 0, ap = 0, bp = 0;
};

// Present iff all four endpoints of the arcs at 0-resolved crossings c1, c2
// lie on one circle and are linked there.
std::optional<LadybugFrame> ladybug_data(const Diagram& d,
                                         const ResolutionConfig& cfg, int c1,
                                         int c2);

} // namespace khsq
