#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "khsq/complex.hpp"
#include "khsq/homotopy.hpp"
#include "khsq/pd.hpp"

using namespace khsq;

namespace {

Quiver zero_quiver(int d1, int d2, int d3) {
  Quiver q;
  q.d1 = d1;
  q.d2 = d2;
  q.d3 = d3;
  q.f.assign(d1, BitVec(d2));
  q.g.assign(d2, BitVec(d3));
  q.s.assign(d1, BitVec(d3));
  return q;
}

// Build the quiver that is a direct sum of prescribed irreducible pieces and
// check decompose_quiver recovers the counts (forward-consistency).
Quiver direct_sum(const DecompositionCounts& want) {
  int d1 = want.s1 + want.p1 + want.x1 + want.x2 + want.x3 + want.x4;
  int d2 = want.s2 + want.p1 + want.p2 + want.x2 + want.x3 + 2 * want.x4;
  int d3 = want.s3 + want.p2 + want.x1 + want.x2 + want.x3 + want.x4;
  Quiver q = zero_quiver(d1, d2, d3);
  int a = want.s1, b = want.s2, c = want.s3;
  for (int t = 0; t < want.p1; ++t, ++a, ++b) q.f[a].set(b, true);
  for (int t = 0; t < want.p2; ++t, ++b, ++c) q.g[b].set(c, true);
  for (int t = 0; t < want.x1; ++t, ++a, ++c) q.s[a].set(c, true);
  for (int t = 0; t < want.x2; ++t, ++a, ++b, ++c) {
    q.f[a].set(b, true);
    q.s[a].set(c, true);
  }
  // X-3 (RP4/RP1): g and s nonzero, f = 0; the sq2 chord hits im g
  for (int t = 0; t < want.x3; ++t, ++a, ++b, ++c) {
    q.g[b].set(c, true);
    q.s[a].set(c, true);
  }
  // X-4 (RP2 smash RP2): dims (1,2,1); f into b, g out of b+1, s the chord
  for (int t = 0; t < want.x4; ++t, ++a, b += 2, ++c) {
    q.f[a].set(b, true);
    q.g[b + 1].set(c, true);
    q.s[a].set(c, true);
  }
  return q;
}

bool counts_equal(const DecompositionCounts& a, const DecompositionCounts& b) {
  return a.s1 == b.s1 && a.s2 == b.s2 && a.s3 == b.s3 && a.p1 == b.p1 &&
         a.p2 == b.p2 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 &&
         a.x4 == b.x4;
}

} // namespace

TEST_CASE("quiver decomposition on pinned direct sums") {
  {
    auto got = decompose_quiver(zero_quiver(1, 1, 1));
    DecompositionCounts want;
    want.s1 = want.s2 = want.s3 = 1;
    CHECK(counts_equal(got, want));
  }
  {
    DecompositionCounts want;
    want.x4 = 1;
    CHECK(counts_equal(decompose_quiver(direct_sum(want)), want));
  }
  {
    DecompositionCounts want;
    want.x1 = 2;
    want.p1 = 1;
    want.s3 = 1;
    CHECK(counts_equal(decompose_quiver(direct_sum(want)), want));
  }
}

TEST_CASE("quiver decomposition round-trips random direct sums") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    DecompositionCounts want;
    want.s1 = rng() % 3;
    want.s2 = rng() % 3;
    want.s3 = rng() % 3;
    want.p1 = rng() % 3;
    want.p2 = rng() % 3;
    want.x1 = rng() % 3;
    want.x2 = rng() % 3;
    want.x3 = rng() % 3;
    want.x4 = rng() % 3;
    CHECK(counts_equal(decompose_quiver(direct_sum(want)), want));
  }
}

TEST_CASE("decompose_quiver rejects gf != 0") {
  Quiver q = zero_quiver(1, 1, 1);
  q.f[0].set(0, true);
  q.g[0].set(0, true);
  CHECK_THROWS_AS(decompose_quiver(q), std::logic_error);
}

TEST_CASE("width-3 gate accepts the trefoil and rejects synthetic tables") {
  std::map<Bigrading, KhGroup> tre;
  tre[{0, 1}] = {1, {}};
  tre[{0, 3}] = {1, {}};
  tre[{2, 5}] = {1, {}};
  tre[{3, 7}] = {0, {2}};
  tre[{3, 9}] = {1, {}};
  auto r = check_width3(tre);
  REQUIRE(r.ok);
  CHECK(r.sigma == -3); // min(2i - j) = 2*0 - 3
  // four diagonals
  auto wide = tre;
  wide[{5, 7}] = {1, {}};
  CHECK(!check_width3(wide).ok);
  // odd torsion
  auto z3 = tre;
  z3[{2, 5}] = {1, {3}};
  CHECK(!check_width3(z3).ok);
  // Z/4 counts as 2-power but is still outside the classified family
  auto z4 = tre;
  z4[{3, 7}] = {0, {4}};
  CHECK(!check_width3(z4).ok);
  // torsion on the sigma diagonal
  auto sig = tre;
  sig[{0, 3}] = {1, {2}};
  CHECK(!check_width3(sig).ok);
}

TEST_CASE("wedge summand serialization") {
  CHECK(summand_text({WedgeSummand::Sphere, -9}) == "S^-9");
  CHECK(summand_text({WedgeSummand::RP2, -10}) == "Σ^-10 RP2");
  CHECK(summand_text({WedgeSummand::CP2, 3}) == "Σ^3 CP2");
  CHECK(summand_text({WedgeSummand::RP5modRP2, 0}) == "Σ^0 (RP5/RP2)");
  CHECK(summand_text({WedgeSummand::RP4modRP1, -2}) == "Σ^-2 (RP4/RP1)");
  CHECK(summand_text({WedgeSummand::SmashRP2, 1}) == "Σ^1 (RP2^RP2)");
  WedgeExpr w;
  CHECK(w.text() == "*");
  w.summands = {{WedgeSummand::Sphere, -9}, {WedgeSummand::RP2, -10}};
  CHECK(w.text() == "S^-9 v Σ^-10 RP2");
}

TEST_CASE("wedge cohomology tables") {
  WedgeExpr w;
  w.summands = {{WedgeSummand::RP2, 0}};
  auto h = wedge_cohomology(w);
  CHECK(h == std::map<int, int>{{1, 1}, {2, 1}});
  w.summands = {{WedgeSummand::CP2, 0}};
  CHECK(wedge_cohomology(w) == std::map<int, int>{{2, 1}, {4, 1}});
  w.summands = {{WedgeSummand::RP5modRP2, 0}};
  CHECK(wedge_cohomology(w) == std::map<int, int>{{3, 1}, {4, 1}, {5, 1}});
  w.summands = {{WedgeSummand::RP4modRP1, 0}};
  CHECK(wedge_cohomology(w) == std::map<int, int>{{2, 1}, {3, 1}, {4, 1}});
  w.summands = {{WedgeSummand::SmashRP2, 0}};
  CHECK(wedge_cohomology(w) == std::map<int, int>{{2, 1}, {3, 2}, {4, 1}});
  w.summands = {{WedgeSummand::Sphere, 3}, {WedgeSummand::Sphere, 3}};
  CHECK(wedge_cohomology(w) == std::map<int, int>{{3, 2}});
}

TEST_CASE("homotopy types of small links have matching F2 cohomology") {
  for (const char* pd :
       {"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
        "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)",
        "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"}) {
    Complex c{Diagram(parse_pd(pd))};
    auto kh = kh_z(c);
    auto gate = check_width3(kh);
    REQUIRE(gate.ok);
    std::set<int> js;
    for (const auto& [ij, g] : kh) js.insert(ij.j);
    for (int j : js) {
      auto w = homotopy_type(kh, sq_maps(c, j), j, gate.sigma);
      // reduced F2 cohomology of the wedge in degree i must equal
      // dim Kh_F2^{i,j}; the wedge encodes the suspension so degrees equal i.
      auto hw = wedge_cohomology(w);
      for (int i = -20; i <= 20; ++i) {
        auto it = hw.find(i);
        CHECK((it != hw.end() ? it->second : 0) == f2_dim(kh, {i, j}));
      }
      int total = 0;
      for (auto& [deg, dim] : hw) total += dim;
      int khtotal = 0;
      for (int i = -20; i <= 20; ++i) khtotal += f2_dim(kh, {i, j});
      CHECK(total == khtotal);
    }
  }
}

TEST_CASE("trefoil homotopy types (frozen)") {
  Complex c{Diagram(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"))};
  auto kh = kh_z(c);
  auto gate = check_width3(kh);
  REQUIRE(gate.ok);
  CHECK(homotopy_type(kh, sq_maps(c, 1), 1, gate.sigma).text() == "S^0");
  CHECK(homotopy_type(kh, sq_maps(c, 3), 3, gate.sigma).text() == "S^0");
  CHECK(homotopy_type(kh, sq_maps(c, 5), 5, gate.sigma).text() == "S^2");
  CHECK(homotopy_type(kh, sq_maps(c, 7), 7, gate.sigma).text() == "Σ^1 RP2");
  CHECK(homotopy_type(kh, sq_maps(c, 9), 9, gate.sigma).text() == "S^3");
}

TEST_CASE("f2_dim applies universal coefficients") {
  std::map<Bigrading, KhGroup> kh;
  kh[{0, 1}] = {2, {2, 2}};
  kh[{1, 1}] = {1, {2}};
  CHECK(f2_dim(kh, {0, 1}) == 2 + 2 + 1);
  CHECK(f2_dim(kh, {1, 1}) == 1 + 1 + 0);
  CHECK(f2_dim(kh, {-1, 1}) == 0 + 0 + 2);
  CHECK(f2_dim(kh, {5, 5}) == 0);
}
