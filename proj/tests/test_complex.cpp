#include <doctest.h>

#include <algorithm>
#include <set>

#include "cfk/builders.hpp"
#include "cfk/complex.hpp"
#include "cfk/errors.hpp"

using namespace cfk;

namespace {

bool has_kind(const ValidationReport& r, ViolationKind k) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == k; });
}

CfkComplex trefoil_by_hand() {
  CfkComplex c;
  c.name = "trefoil";
  c.generators = {{"z1", 1, 0}, {"z2", 0, -1}, {"z3", -1, -2}};
  c.differential = {{"z2", "z1", 1}, {"z2", "z3", 0}};
  return c;
}

}  // namespace

TEST_CASE("unknot validates") {
  CHECK(validate(unknot()).valid);
}

TEST_CASE("trefoil staircase validates") {
  CHECK(validate(trefoil_by_hand()).valid);
}

TEST_CASE("negative u_power is rejected") {
  CfkComplex c;
  c.generators = {{"x", 0, 0}, {"y", 1, 1}};
  c.differential = {{"x", "y", -1}};
  auto report = validate(c);
  CHECK_FALSE(report.valid);
  CHECK(has_kind(report, ViolationKind::NegativeUPower));
}

TEST_CASE("three-step chain fails d^2 = 0") {
  CfkComplex c;
  c.generators = {{"x", 0, 0}, {"y", 0, -1}, {"z", 0, -2}};
  c.differential = {{"x", "y", 0}, {"y", "z", 0}};
  auto report = validate(c);
  CHECK_FALSE(report.valid);
  CHECK(has_kind(report, ViolationKind::DSquaredNonzero));
}

TEST_CASE("duplicate ids are reported") {
  CfkComplex c;
  c.generators = {{"x", 0, 0}, {"x", 1, 1}};
  auto report = validate(c);
  CHECK(has_kind(report, ViolationKind::DuplicateId));
}

TEST_CASE("duplicate differential terms cancel pairwise") {
  CfkComplex c = trefoil_by_hand();
  c.differential.push_back({"z2", "z1", 1});
  c.differential.push_back({"z2", "z1", 1});
  c.reduce_mod2();
  CHECK(c.differential.size() == 2);
  c.differential.push_back({"z2", "z1", 1});
  c.reduce_mod2();
  CHECK(c.differential.size() == 1);
}

TEST_CASE("mirror of the unknot is the unknot") {
  auto m = mirror(unknot());
  CHECK(m.generators.size() == 1);
  CHECK(m.generators[0].alexander == 0);
  CHECK(m.generators[0].maslov == 0);
  CHECK(m.differential.empty());
}

TEST_CASE("mirror of the trefoil staircase") {
  auto m = mirror(trefoil_by_hand());
  REQUIRE(m.generators.size() == 3);
  CHECK(m.generators[0].id == "z1*");
  CHECK(m.generators[0].alexander == -1);
  CHECK(m.generators[0].maslov == 0);
  CHECK(m.generators[1].alexander == 0);
  CHECK(m.generators[1].maslov == 1);
  CHECK(m.generators[2].alexander == 1);
  CHECK(m.generators[2].maslov == 2);
  // Arrows reverse and keep their U-powers.
  REQUIRE(m.differential.size() == 2);
  CHECK(std::count(m.differential.begin(), m.differential.end(), DiffTerm{"z1*", "z2*", 1}) == 1);
  CHECK(std::count(m.differential.begin(), m.differential.end(), DiffTerm{"z3*", "z2*", 0}) == 1);
  CHECK(validate(m).valid);
}

TEST_CASE("mirror is an involution up to relabeling") {
  for (const auto& c : {trefoil_by_hand(), torus(2, 9), torus(4, 5), box(0, 0)}) {
    CHECK(isomorphic_by_order(mirror(mirror(c)), c));
  }
}

TEST_CASE("tensor with the unknot is the identity up to relabeling") {
  for (const auto& c : {trefoil_by_hand(), torus(2, 7), torus(4, 5)}) {
    CHECK(isomorphic_by_order(tensor(unknot(), c), c));
    CHECK(isomorphic_by_order(tensor(c, unknot()), c));
  }
}

TEST_CASE("tensor generator count multiplies") {
  auto t = tensor(torus(4, 5), torus(2, 9));
  CHECK(t.generators.size() == 63);
  CHECK(validate(t).valid);
}

TEST_CASE("tensor of valid knots validates") {
  CHECK(validate(tensor(trefoil_by_hand(), trefoil_by_hand())).valid);
}

TEST_CASE("direct sum counts add and boxes keep the knot condition") {
  auto s = direct_sum(torus(2, 9), box(0, 0));
  CHECK(s.generators.size() == 13);
  CHECK(validate(s).valid);
}

TEST_CASE("direct sum of two knots breaks the knot condition") {
  auto s = direct_sum(trefoil_by_hand(), trefoil_by_hand());
  CHECK(s.generators.size() == 6);
  auto report = validate(s);
  CHECK_FALSE(report.valid);
  CHECK(has_kind(report, ViolationKind::VerticalHomologyWrong));
  CHECK(validate(s, /*allow_non_knot=*/true).valid);
}

TEST_CASE("direct sum renames colliding ids") {
  auto s = direct_sum(trefoil_by_hand(), trefoil_by_hand());
  std::set<std::string> ids;
  for (const auto& g : s.generators) CHECK(ids.insert(g.id).second);
}

TEST_CASE("maslov and filtration axioms hold for builder output") {
  for (const auto& c : {torus(2, 9), torus(4, 5), torus(5, 6), box(2, 1)}) {
    for (const auto& t : c.differential) {
      const auto& from = c.generators[*c.index_of(t.from)];
      const auto& to = c.generators[*c.index_of(t.to)];
      CHECK(t.u_power >= 0);
      CHECK(t.u_power + from.alexander - to.alexander >= 0);
      CHECK(to.maslov - 2 * t.u_power == from.maslov - 1);
    }
  }
}
