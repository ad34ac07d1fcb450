#include <doctest.h>

#include "cfk/builders.hpp"
#include "cfk/regions.hpp"
#include "support/oracle.hpp"

using namespace cfk;

TEST_CASE("window membership matches the defining inequalities") {
  const std::vector<Window> windows = {
      {WindowKind::MaxWindow, -2, 1},  {WindowKind::MaxWindow, 0, 3},
      {WindowKind::MaxWindow, 3, 2},   {WindowKind::MinWindow, -1, 2},
      {WindowKind::MinWindow, 2, 4},   {WindowKind::ColumnWindow, 0, 1},
      {WindowKind::ColumnWindow, 0, 5}};
  for (const auto& w : windows)
    for (int alexander = -6; alexander <= 6; ++alexander) {
      Generator g{"g", alexander, 0};
      int count = 0;
      for (int t = -20; t <= 20; ++t) {
        const bool expect = testsupport::window_member_reference(w, alexander, t);
        CHECK(window_contains(w, g, t) == expect);
        if (expect) {
          CHECK(t >= window_first_translate(w, g));
          ++count;
        }
      }
      // Each window holds exactly n consecutive translates of every generator.
      CHECK(count == w.n);
      CHECK(window_contains(w, g, window_first_translate(w, g)));
      CHECK_FALSE(window_contains(w, g, window_first_translate(w, g) - 1));
      CHECK_FALSE(window_contains(w, g, window_first_translate(w, g) + w.n));
    }
}

TEST_CASE("extracted basis size is n * generator count") {
  auto c = torus(2, 9);
  for (int n = 1; n <= 6; ++n) {
    for (int s = -5; s <= 5; ++s) {
      CHECK(extract(c, {WindowKind::MaxWindow, s, n}).dim() == 9u * n);
      CHECK(extract(c, {WindowKind::MinWindow, s, n}).dim() == 9u * n);
    }
    CHECK(extract(c, {WindowKind::ColumnWindow, 0, n}).dim() == 9u * n);
  }
}

TEST_CASE("min window s=2 n=2 of T_{2,9} holds the expected translates") {
  auto c = torus(2, 9);
  auto r = extract(c, {WindowKind::MinWindow, 2, 2});
  REQUIRE(r.dim() == 18);
  CHECK(r.find("z1", 0));
  CHECK(r.find("z1", 1));
  CHECK(r.find("z2", 0));
  CHECK(r.find("z2", 1));
  CHECK(r.find("z3", 0));
  CHECK(r.find("z4", 1));
  CHECK(r.find("z4", 2));
  CHECK(r.find("z5", 2));
  CHECK(r.find("z5", 3));
  CHECK(r.find("z6", 3));
  CHECK(r.find("z6", 4));
  CHECK_FALSE(r.find("z7", 3));
  CHECK(r.find("z7", 4));
}

TEST_CASE("region boundaries square to zero") {
  for (const auto& c : {torus(2, 9), torus(4, 5), tensor(torus(2, 5), torus(2, 7))}) {
    for (int n = 1; n <= 4; ++n)
      for (int s = -3; s <= 3; ++s) {
        for (auto kind : {WindowKind::MaxWindow, WindowKind::MinWindow}) {
          auto r = extract(c, {kind, s, n});
          CHECK((r.boundary * r.boundary).is_zero());
        }
        auto b = extract(c, {WindowKind::ColumnWindow, 0, n});
        CHECK((b.boundary * b.boundary).is_zero());
      }
  }
}

TEST_CASE("region boundary agrees with a hand count on the trefoil") {
  // B^2 of the trefoil: six elements, d(z2, t) = U z1 + z3 translated,
  // with arrows leaving the window dropped.
  auto c = torus(2, 3);
  auto r = extract(c, {WindowKind::ColumnWindow, 0, 2});
  REQUIRE(r.dim() == 6);
  auto z2_0 = *r.find("z2", 0);
  auto z2_1 = *r.find("z2", 1);
  auto z1_0 = *r.find("z1", 0);
  auto z3_0 = *r.find("z3", 0);
  auto z3_1 = *r.find("z3", 1);
  // d(z2, 0) = (z1, -1) [outside] + (z3, 0); d(z2, 1) = (z1, 0) + (z3, 1).
  CHECK_FALSE(r.boundary.get(z1_0, z2_0));
  CHECK(r.boundary.get(z3_0, z2_0));
  CHECK(r.boundary.get(z1_0, z2_1));
  CHECK(r.boundary.get(z3_1, z2_1));
}

TEST_CASE("maslov of a translate shifts by 2t") {
  auto c = torus(4, 5);
  auto r = extract(c, {WindowKind::MaxWindow, 0, 3});
  for (std::size_t k = 0; k < r.dim(); ++k) {
    const auto& e = r.basis[k];
    CHECK(r.maslov[k] == c.generators[e.gen_index].maslov + 2 * e.t);
  }
}

TEST_CASE("vertical complex equals column window of depth 1") {
  auto c = torus(2, 9);
  auto v = vertical_complex(c);
  auto b1 = extract(c, {WindowKind::ColumnWindow, 0, 1});
  CHECK(v.dim() == b1.dim());
  CHECK(v.boundary == b1.boundary);
}

TEST_CASE("chain maps commute with the boundaries") {
  for (const auto& c : {torus(2, 9), torus(4, 5)}) {
    for (int n = 1; n <= 4; ++n)
      for (int s = -4; s <= 4; ++s) {
        auto pos = chain_map_pos(c, s, n);
        CHECK(pos.matrix * pos.domain.boundary == pos.codomain.boundary * pos.matrix);
        auto neg = chain_map_neg(c, s, n);
        CHECK(neg.matrix * neg.domain.boundary == neg.codomain.boundary * neg.matrix);
      }
  }
}

TEST_CASE("chain map entries are identity on shared names, zero elsewhere") {
  auto c = torus(2, 5);
  auto f = chain_map_pos(c, 1, 2);
  for (std::size_t r = 0; r < f.codomain.dim(); ++r)
    for (std::size_t col = 0; col < f.domain.dim(); ++col) {
      const auto& d = f.domain.basis[col];
      const auto& e = f.codomain.basis[r];
      const bool same = d.gen_index == e.gen_index && d.t == e.t;
      CHECK(f.matrix.get(r, col) == same);
    }
}
