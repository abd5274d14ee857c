#include <doctest.h>

#include <set>
#include <stdexcept>

#include "khsq/pd.hpp"

using namespace khsq;

namespace {
const char* kRightTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kLeftTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
const char* kFig8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
} // namespace

TEST_CASE("parse_pd accepts both bracket styles and separators") {
  auto a = parse_pd("X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)");
  auto b = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  REQUIRE(a.size() == 3);
  REQUIRE(b.size() == 3);
  for (int c = 0; c < 3; ++c) CHECK(a[c].e == b[c].e);
  CHECK(a[0].e == std::array<int, 4>{1, 4, 2, 5});
}

TEST_CASE("parse_pd rejects malformed input") {
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pd("X(1,2,3,4) garbage"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pd(""), std::invalid_argument);
}

TEST_CASE("Diagram rejects labels not appearing exactly twice") {
  CHECK_THROWS(Diagram(parse_pd("X(1,2,3,4)")));
  // label 1 appears four times
  CHECK_THROWS(Diagram(parse_pd("X(1,1,2,2) X(1,1,3,3)")));
}

TEST_CASE("crossing signs: right trefoil all positive, left all negative") {
  Diagram r(parse_pd(kRightTrefoil));
  Diagram l(parse_pd(kLeftTrefoil));
  for (int c = 0; c < 3; ++c) {
    CHECK(r.sign(c) == 1);
    CHECK(l.sign(c) == -1);
  }
  CHECK(r.n_minus() == 0);
  CHECK(l.n_minus() == 3);
}

TEST_CASE("figure eight has two negative crossings and one component") {
  Diagram d(parse_pd(kFig8));
  CHECK(d.n() == 4);
  CHECK(d.n_minus() == 2);
  int writhe = 0;
  for (int c = 0; c < d.n(); ++c) writhe += d.sign(c);
  CHECK(writhe == d.n() - 2 * d.n_minus());
  REQUIRE(d.components().size() == 1);
  // the single component visits every edge exactly once
  std::set<int> seen(d.components()[0].begin(), d.components()[0].end());
  CHECK((int)seen.size() == d.n_edges());
}

TEST_CASE("degenerate one-crossing kink parses with consistent orientation") {
  // b = d+1 and the wrap rule coincide here; only the global orientation
  // determines the sign (a positive kink).
  Diagram d(parse_pd("X(1,2,2,1)"));
  CHECK(d.n() == 1);
  CHECK(d.sign(0) == 1);
  CHECK(d.n_minus() == 0);
  CHECK(d.components().size() == 1);
}

TEST_CASE("Hopf links: orientation conventions give +-2 writhe") {
  Diagram pos(parse_pd("X(4,1,3,2) X(2,3,1,4)"));
  Diagram neg(parse_pd("X(1,3,2,4) X(3,1,4,2)"));
  CHECK(pos.n_minus() + neg.n_minus() == 2); // one of each chirality
  CHECK(pos.components().size() == 2);
  CHECK(neg.components().size() == 2);
}

TEST_CASE("faces satisfy Euler's formula and darts are involutive") {
  for (const char* pd : {kRightTrefoil, kLeftTrefoil, kFig8}) {
    Diagram d(parse_pd(pd));
    CHECK(d.num_faces() == d.n() + 2);
    for (int dart = 0; dart < 4 * d.n(); ++dart) {
      CHECK(d.alpha(d.alpha(dart)) == dart);
      CHECK(d.alpha(dart) != dart);
    }
    // each edge's two darts share a face count consistent with corner faces
    for (int c = 0; c < d.n(); ++c)
      for (int s = 0; s < 4; ++s) {
        int f = d.corner_face(c, s);
        CHECK(f >= 0);
        CHECK(f < d.num_faces());
      }
  }
}

TEST_CASE("components follow orientation (consecutive labels where possible)") {
  Diagram d(parse_pd(kRightTrefoil));
  REQUIRE(d.components().size() == 1);
  const auto& comp = d.components()[0];
  REQUIRE(comp.size() == 6);
  // edges 1..6 in cyclic order
  for (int t = 0; t < 6; ++t)
    CHECK(comp[(t + 1) % 6] == comp[t] % 6 + 1);
}

TEST_CASE("smoothing pairs match the pinned convention") {
  auto z = Diagram::smooth_pairs(0);
  auto o = Diagram::smooth_pairs(1);
  CHECK(z[0] == std::array<int, 2>{0, 3});
  CHECK(z[1] == std::array<int, 2>{1, 2});
  CHECK(o[0] == std::array<int, 2>{0, 1});
  CHECK(o[1] == std::array<int, 2>{2, 3});
}
