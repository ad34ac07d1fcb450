#include <doctest.h>

#include <filesystem>

#include "cfk/builders.hpp"
#include "cfk/errors.hpp"
#include "cfk/io.hpp"
#include "cfk/invariants.hpp"

using namespace cfk;

TEST_CASE("serialize then parse is the identity") {
  for (const auto& c : {unknot(), torus(2, 9), torus(4, 5), mirror(torus(3, 4))}) {
    auto parsed = parse_complex(serialize_complex(c));
    CHECK(parsed.complex.name == c.name);
    CHECK(parsed.complex.generators == c.generators);
    CHECK(parsed.complex.differential == c.differential);
    CHECK_FALSE(parsed.allow_non_knot);
  }
  auto b = parse_complex(serialize_complex(box(0, 0), /*allow_non_knot=*/true));
  CHECK(b.allow_non_knot);
}

TEST_CASE("file round trip") {
  auto path = std::filesystem::temp_directory_path() / "cfk_io_test.json";
  write_complex_file(path, torus(2, 7));
  auto parsed = parse_complex_file(path);
  CHECK(parsed.complex.generators.size() == 7);
  std::filesystem::remove(path);
}

TEST_CASE("positions determine alexander and u_power") {
  const char* text = R"({
    "name": "trefoil",
    "generators": [
      {"id": "z1", "maslov": 0, "position": [0, 1]},
      {"id": "z2", "maslov": -1, "position": [1, 1]},
      {"id": "z3", "maslov": -2, "position": [1, 0]}
    ],
    "differential": [
      {"from": "z2", "to": "z1"},
      {"from": "z2", "to": "z3"}
    ]
  })";
  auto parsed = parse_complex(text);
  CHECK(parsed.complex.generators[0].alexander == 1);
  CHECK(parsed.complex.generators[2].alexander == -1);
  // u_power is the i-displacement between the drawn positions.
  for (const auto& t : parsed.complex.differential) {
    if (t.to == "z1") CHECK(t.u_power == 1);
    if (t.to == "z3") CHECK(t.u_power == 0);
  }
}

TEST_CASE("position and alexander disagreement is a parse error") {
  const char* text = R"({
    "name": "bad",
    "generators": [{"id": "x", "alexander": 2, "maslov": 0, "position": [0, 1]}],
    "differential": []
  })";
  CHECK_THROWS_AS(parse_complex(text), ParseError);
}

TEST_CASE("schema violations are parse errors") {
  CHECK_THROWS_AS(parse_complex("not json"), ParseError);
  CHECK_THROWS_AS(parse_complex("{}"), ParseError);
  CHECK_THROWS_AS(parse_complex(R"({"name": 1, "generators": [], "differential": []})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_complex(
          R"({"name": "x", "generators": [{"id": "a", "alexander": 0.5, "maslov": 0}], "differential": []})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_complex(
          R"({"name": "x", "generators": [{"id": "a", "alexander": 0, "maslov": 0}], "differential": [{"from": "a", "to": "b", "u_power": 0}]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_complex(
          R"({"name": "x", "generators": [{"id": "a", "alexander": 0, "maslov": 0}], "differential": [{"from": "a", "to": "a", "u_power": -1}]})"),
      ParseError);
}

TEST_CASE("duplicate terms reduce with a warning") {
  const char* text = R"({
    "name": "dup",
    "generators": [
      {"id": "z1", "alexander": 1, "maslov": 0},
      {"id": "z2", "alexander": 0, "maslov": -1},
      {"id": "z3", "alexander": -1, "maslov": -2}
    ],
    "differential": [
      {"from": "z2", "to": "z1", "u_power": 1},
      {"from": "z2", "to": "z1", "u_power": 1},
      {"from": "z2", "to": "z1", "u_power": 1},
      {"from": "z2", "to": "z3", "u_power": 0}
    ]
  })";
  auto parsed = parse_complex(text);
  CHECK(parsed.complex.differential.size() == 2);
  CHECK_FALSE(parsed.warnings.empty());
}

TEST_CASE("tsv output shape") {
  auto p = profile(torus(2, 5), -2, 2);
  auto tsv = profile_to_tsv(p);
  CHECK(tsv.find("# tau=2") != std::string::npos);
  CHECK(tsv.find("# nu_plus=2") != std::string::npos);
  CHECK(tsv.find("# nu_plus_prime=0") != std::string::npos);
  CHECK(tsv.find("-2\t0\t") != std::string::npos);
  CHECK(tsv.find("2\t2\t") != std::string::npos);
}

TEST_CASE("profile json round trip is lossless") {
  auto p = profile(torus(4, 5), -3, 3);
  auto q = parse_profile_json(profile_to_json(p));
  CHECK(q.name == p.name);
  CHECK(q.tau == p.tau);
  CHECK(q.nu_plus.value == p.nu_plus.value);
  CHECK(q.nu_plus.n_used == p.nu_plus.n_used);
  CHECK(q.nu_plus_prime.value == p.nu_plus_prime.value);
  CHECK(q.stabilization_verified == p.stabilization_verified);
  REQUIRE(q.entries.size() == p.entries.size());
  for (const auto& [n, r] : p.entries) {
    const auto& s = q.entries.at(n);
    CHECK(s.value == r.value);
    CHECK(s.witness_s_set == r.witness_s_set);
    CHECK(s.monotone_flag == r.monotone_flag);
  }
}
