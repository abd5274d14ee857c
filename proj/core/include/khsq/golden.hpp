#pragma once
// The artificial three-level complex used as a built-in regression fixture:
// five generators y1..y5, six z1..z6, two x1..x2, with hand-picked signs,
// frames, and involutions (no underlying link). Levels are indexed from 0,
// so y1 is A-index 0 and so on.

#include "khsq/steenrod.hpp"

namespace khsq {

inline SquareInput golden_square_input() {
  SquareInput in;
  in.nA = 5;
  in.nB = 6;
  in.nC = 2;
  // y -> [(z, s)]
  in.dAB = {
      {{0, 1}, {1, 1}, {2, 0}, {3, 0}}, // y1
      {{0, 1}, {2, 0}, {4, 0}},         // y2
      {{1, 0}, {3, 1}, {4, 0}},         // y3
      {{4, 0}, {5, 0}},                 // y4
      {{4, 0}, {5, 0}},                 // y5
  };
  // z -> [(x, s)]
  in.dBC = {
      {{0, 0}, {1, 0}}, // z1
      {{0, 0}},         // z2
      {{0, 0}},         // z3
      {{0, 0}, {1, 0}}, // z4
      {{1, 0}},         // z5
      {{1, 1}},         // z6
  };
  in.frame = {{{0, 0}, 1}, {{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 1},
              {{0, 2}, 1}, {{1, 2}, 0}, {{1, 3}, 1}, {{1, 4}, 1}};
  auto swap2 = [](int za, int zb) {
    return std::vector<std::pair<int, int>>{{za, zb}, {zb, za}};
  };
  in.lam[{0, 0}] = {{0, 3}, {3, 0}, {1, 2}, {2, 1}}; // the ladybug-style pairing
  in.lam[{1, 0}] = swap2(0, 3);
  in.lam[{0, 1}] = swap2(0, 2);
  in.lam[{1, 1}] = swap2(0, 4);
  in.lam[{0, 2}] = swap2(1, 3);
  in.lam[{1, 2}] = swap2(3, 4);
  in.lam[{1, 3}] = swap2(4, 5);
  in.lam[{1, 4}] = swap2(4, 5);
  in.validate();
  return in;
}

inline BitVec golden_cycle() {
  BitVec c(5);
  for (int y = 0; y < 5; ++y) c.flip(y);
  return c;
}

// The explicitly chosen boundary matching for the fixture's cycle.
inline BoundaryMatching golden_matching() {
  BoundaryMatching m;
  m.mu.resize(6);
  m.h.resize(6);
  auto pair = [&](int z, int y1, int y2, int h1, int h2) {
    m.mu[z][y1] = y2;
    m.mu[z][y2] = y1;
    m.h[z][y1] = h1;
    m.h[z][y2] = h2;
  };
  pair(0, 0, 1, 0, 1); // z1: y1 <-> y2
  pair(1, 0, 2, 0, 0); // z2: y1 <-> y3
  pair(2, 0, 1, 0, 1); // z3: y1 <-> y2
  pair(3, 0, 2, 0, 0); // z4: y1 <-> y3
  pair(4, 1, 2, 0, 1); // z5: y2 <-> y3
  pair(4, 3, 4, 0, 1); // z5: y4 <-> y5
  pair(5, 3, 4, 0, 1); // z6: y4 <-> y5
  return m;
}

} // namespace khsq
