#pragma once
// Sign and frame assignments on the cube of resolutions.
//
// For v <=_1 u differing in bit i:  s(C_{u,v}) = (#set bits of v below i) mod 2.
// For v <=_2 u differing in bits i < j:
//   f(C_{u,v}) = (e1 * e2) mod 2 with e1 = #set bits of v below i,
//                                  e2 = #set bits of v strictly between i and j.
// These are the standard assignments; delta s = 1_2 and the frame-assignment
// sum identity are enforced by tests.

#include <bit>
#include <cstdint>

#include "khsq/pd.hpp"

namespace khsq {

inline int popcount(Vertex v) { return std::popcount(v); }

inline int sign_s(Vertex v, Vertex u) {
  Vertex d = u ^ v;
  int i = std::bit_width(d) - 1;
  return popcount(v & ((Vertex{1} << i) - 1)) & 1;
}

inline int frame_f(Vertex v, Vertex u) {
  Vertex d = u ^ v;
  int j = std::bit_width(d) - 1;
  Vertex dj = d ^ (Vertex{1} << j);
  int i = std::bit_width(dj) - 1;
  int e1 = popcount(v & ((Vertex{1} << i) - 1));
  int e2 = popcount(v & (((Vertex{1} << j) - 1) & ~((Vertex{1} << (i + 1)) - 1)));
  return (e1 & 1) & (e2 & 1);
}

} // namespace khsq
