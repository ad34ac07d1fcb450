#include "cfk/builders.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cfk/errors.hpp"

namespace cfk {

CfkComplex staircase(const StepVector& steps) {
  if (steps.empty() || steps.size() % 2 != 0)
    throw std::invalid_argument("step vector must be nonempty with even length");
  for (int w : steps)
    if (w < 1) throw std::invalid_argument("step widths must be >= 1");

  const std::size_t k = steps.size() / 2;
  int tau = 0;
  for (std::size_t m = 0; m < k; ++m) tau += steps[2 * m + 1];

  CfkComplex c;
  c.name = "staircase[";
  for (std::size_t i = 0; i < steps.size(); ++i)
    c.name += (i ? "," : "") + std::to_string(steps[i]);
  c.name += "]";

  // Corner positions: b_{2m+1} one horizontal step right of b_{2m},
  // b_{2m+2} one vertical step below b_{2m+1}; A = j - i.
  int i = 0, j = tau;
  std::vector<int> alexander(2 * k + 1);
  alexander[0] = j - i;
  for (std::size_t m = 0; m < k; ++m) {
    i += steps[2 * m];
    alexander[2 * m + 1] = j - i;
    j -= steps[2 * m + 1];
    alexander[2 * m + 2] = j - i;
  }

  // M(b_0) = 0, propagated along the arrows by M(from) = M(to) + 1 - 2a.
  std::vector<int> maslov(2 * k + 1);
  maslov[0] = 0;
  for (std::size_t m = 0; m < k; ++m) {
    maslov[2 * m + 1] = maslov[2 * m] + 1 - 2 * steps[2 * m];
    maslov[2 * m + 2] = maslov[2 * m + 1] - 1;
  }

  for (std::size_t l = 0; l <= 2 * k; ++l)
    c.generators.push_back({"b" + std::to_string(l), alexander[l], maslov[l]});
  for (std::size_t m = 0; m < k; ++m) {
    const std::string odd = "b" + std::to_string(2 * m + 1);
    c.differential.push_back({odd, "b" + std::to_string(2 * m), steps[2 * m]});
    c.differential.push_back({odd, "b" + std::to_string(2 * m + 2), 0});
  }
  c.reduce_mod2();
  return c;
}

CfkComplex torus(int p, int q) {
  if (p == 2 && q >= 3 && q % 2 == 1) {
    CfkComplex c = staircase(StepVector(static_cast<std::size_t>(q - 1), 1));
    // Relabel b<l> -> z<l+1> to match the usual z_p staircase labels.
    auto relabel = [](const std::string& id) {
      return "z" + std::to_string(std::stoul(id.substr(1)) + 1);
    };
    for (auto& g : c.generators) g.id = relabel(g.id);
    for (auto& t : c.differential) {
      t.from = relabel(t.from);
      t.to = relabel(t.to);
    }
    c.name = "T(2," + std::to_string(q) + ")";
    c.reduce_mod2();
    return c;
  }
  if (q == p + 1 && p >= 2) {
    StepVector steps;
    for (int j = 1; j <= p - 1; ++j) {
      steps.push_back(j);
      steps.push_back(p - j);
    }
    CfkComplex c = staircase(steps);
    c.name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return c;
  }
  throw UnsupportedTorusKnotError("no staircase data for T(" + std::to_string(p) + "," +
                                  std::to_string(q) + ")");
}

CfkComplex thin_model(int tau) {
  if (tau > 0) return torus(2, 2 * tau + 1);
  if (tau < 0) {
    CfkComplex c = mirror(torus(2, -2 * tau + 1));
    c.name = "thin(" + std::to_string(tau) + ")";
    return c;
  }
  return unknot();
}

CfkComplex box(int alexander_offset, int maslov_top) {
  // Square summand with source b: db = U a + d, da = c, dd = U c.
  CfkComplex c;
  c.name = "box(" + std::to_string(alexander_offset) + "," + std::to_string(maslov_top) + ")";
  c.generators = {
      {"b", alexander_offset, maslov_top - 1},
      {"a", alexander_offset + 1, maslov_top},
      {"d", alexander_offset - 1, maslov_top - 2},
      {"c", alexander_offset, maslov_top - 1},
  };
  c.differential = {
      {"b", "a", 1},
      {"b", "d", 0},
      {"a", "c", 0},
      {"d", "c", 1},
  };
  c.reduce_mod2();
  return c;
}

CfkComplex unknot() {
  CfkComplex c;
  c.name = "unknot";
  c.generators = {{"u0", 0, 0}};
  return c;
}

}  // namespace cfk
