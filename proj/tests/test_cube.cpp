#include <doctest.h>

#include "khsq/cube.hpp"

using namespace khsq;

// Pure cube identities, checked exhaustively for small n.

TEST_CASE("sign assignment satisfies delta s = 1 on every 2-face") {
  for (int n = 2; n <= 6; ++n) {
    for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
      for (int i = 0; i < n; ++i) {
        if (v & (Vertex{1} << i)) continue;
        for (int j = i + 1; j < n; ++j) {
          if (v & (Vertex{1} << j)) continue;
          Vertex u = v | (Vertex{1} << i) | (Vertex{1} << j);
          Vertex vi = v | (Vertex{1} << i), vj = v | (Vertex{1} << j);
          int sum = sign_s(v, vi) + sign_s(vi, u) + sign_s(v, vj) +
                    sign_s(vj, u);
          CHECK(sum % 2 == 1);
        }
      }
    }
  }
}

TEST_CASE("frame assignment satisfies the 3-face sum identity") {
  // For every 3-dimensional face v <=_3 u with new bits i < j < k, the sum of
  // f over its six 2-dimensional faces equals the sum of s over the three
  // edges leaving v (mod 2).  This is the compatibility that makes the frame
  // usable in the sq^2 construction.
  for (int n = 3; n <= 6; ++n) {
    for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
      for (int i = 0; i < n; ++i) {
        if (v & (Vertex{1} << i)) continue;
        for (int j = i + 1; j < n; ++j) {
          if (v & (Vertex{1} << j)) continue;
          for (int k = j + 1; k < n; ++k) {
            if (v & (Vertex{1} << k)) continue;
            Vertex bi = Vertex{1} << i, bj = Vertex{1} << j,
                   bk = Vertex{1} << k;
            Vertex u = v | bi | bj | bk;
            int f_sum = frame_f(v, v | bi | bj) + frame_f(v, v | bi | bk) +
                        frame_f(v, v | bj | bk) + frame_f(v | bi, u) +
                        frame_f(v | bj, u) + frame_f(v | bk, u);
            int s_sum = sign_s(v, v | bi) + sign_s(v, v | bj) +
                        sign_s(v, v | bk);
            CHECK((f_sum + s_sum) % 2 == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("frame is zero whenever an edge set below is empty") {
  CHECK(frame_f(0, 0b11) == 0);
  CHECK(frame_f(0b100, 0b111) == 0);   // e2 = 0
  CHECK(frame_f(0b001, 0b1011) == 0);  // e2 = 0 between bits 1 and 3
  CHECK(frame_f(0b010, 0b1011) == 0);  // e1 = 0 below bit 0
}

TEST_CASE("frame detects odd-odd bit counts") {
  // v has one bit below i=1 and one strictly between i=1 and j=3
  CHECK(frame_f(0b0101, 0b1111) == 1);
}
