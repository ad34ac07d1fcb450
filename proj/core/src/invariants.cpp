#include "cfk/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "cfk/errors.hpp"
#include "cfk/homology.hpp"
#include "cfk/regions.hpp"

namespace cfk {

namespace {

struct ScanRange {
  int lo, hi;
};

ScanRange scan_range(const CfkComplex& c) {
  return {c.min_alexander() - 1, c.max_alexander() + 1};
}

// Inclusion of the sub-column C{i=0, j<=s} into the full column C{i=0}.
ChainMap subcolumn_inclusion(const CfkComplex& c, int s) {
  ChainMap f;
  f.codomain = vertical_complex(c);

  RegionComplex sub;
  sub.window = Window{WindowKind::ColumnWindow, s, 1};
  sub.source = c.name;
  std::vector<std::size_t> kept;  // generator index -> sub index
  for (std::size_t g = 0; g < c.generators.size(); ++g) {
    if (c.generators[g].alexander > s) continue;
    sub.basis.push_back({g, c.generators[g].id, 0});
    sub.maslov.push_back(c.generators[g].maslov);
    kept.push_back(g);
  }
  std::vector<std::size_t> sub_index(c.generators.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < kept.size(); ++i) sub_index[kept[i]] = i;

  sub.boundary = f2::Matrix(sub.dim(), sub.dim());
  for (const auto& t : c.indexed_terms()) {
    if (t.u_power != 0) continue;
    // A vertical arrow never raises the Alexander grading, so the target of
    // a kept source is kept as well; guard anyway.
    if (sub_index[t.from] == static_cast<std::size_t>(-1)) continue;
    if (sub_index[t.to] == static_cast<std::size_t>(-1)) continue;
    sub.boundary.flip(sub_index[t.to], sub_index[t.from]);
  }

  f.domain = std::move(sub);
  f.matrix = f2::Matrix(f.codomain.dim(), f.domain.dim());
  for (std::size_t i = 0; i < kept.size(); ++i) f.matrix.set(kept[i], i, true);
  return f;
}

// Exhaustive verdict scan; verdicts[k] corresponds to s = lo + k.
std::vector<bool> scan_verdicts(const CfkComplex& c, int n) {
  const auto [lo, hi] = scan_range(c);
  std::vector<bool> verdicts;
  verdicts.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int s = lo; s <= hi; ++s) {
    if (n > 0) {
      verdicts.push_back(induced_map(chain_map_pos(c, s, n)).surjective);
    } else if (n < 0) {
      verdicts.push_back(induced_map(chain_map_neg(c, s, -n)).injective);
    } else {
      verdicts.push_back(induced_map(subcolumn_inclusion(c, s)).surjective);
    }
  }
  return verdicts;
}

NuResult nu_n_unchecked(const CfkComplex& c, int n) {
  const auto [lo, hi] = scan_range(c);
  const auto verdicts = scan_verdicts(c, n);

  NuResult r;
  r.n = n;
  for (int s = lo; s <= hi; ++s)
    if (verdicts[static_cast<std::size_t>(s - lo)]) r.witness_s_set.push_back(s);
  if (r.witness_s_set.empty())
    throw InvalidComplexError("no witness s for nu_" + std::to_string(n) + " of '" + c.name +
                              "'");  // impossible for valid complexes

  // For n >= 0 (surjectivity) the verdict should persist upward; for n < 0
  // (injectivity) downward. Record whether the observed set has that shape.
  const int extremal = n < 0 ? r.witness_s_set.back() : r.witness_s_set.front();
  r.value = extremal;
  const std::size_t expected = static_cast<std::size_t>(n < 0 ? extremal - lo + 1 : hi - extremal + 1);
  r.monotone_flag = r.witness_s_set.size() == expected;
  return r;
}

StabilizedValue stabilize(const CfkComplex& c, const StabilizationOptions& opts) {
  const long long min_depth = c.breadth() + 1;
  std::vector<int> values;
  for (int n = 1; n <= opts.n_cap; ++n) {
    values.push_back(nu_n_unchecked(c, n).value);
    const int plateau = opts.plateau;
    if (static_cast<int>(values.size()) >= plateau && n >= min_depth) {
      bool flat = true;
      for (int k = 1; k < plateau; ++k)
        if (values[values.size() - 1 - static_cast<std::size_t>(k)] != values.back()) flat = false;
      if (flat) {
        // first n achieving the trailing plateau value
        std::size_t first = values.size() - 1;
        while (first > 0 && values[first - 1] == values.back()) --first;
        return {values.back(), static_cast<int>(first + 1), true};
      }
    }
  }
  std::size_t first = values.size() - 1;
  while (first > 0 && values[first - 1] == values.back()) --first;
  return {values.back(), static_cast<int>(first + 1), false};
}

}  // namespace

int tau(const CfkComplex& c) {
  require_valid(c);
  return nu_n_unchecked(c, 0).value;
}

NuResult nu_n(const CfkComplex& c, int n) {
  require_valid(c);
  return nu_n_unchecked(c, n);
}

StabilizedValue nu_plus(const CfkComplex& c, StabilizationOptions opts) {
  require_valid(c);
  return stabilize(c, opts);
}

StabilizedValue nu_plus_prime(const CfkComplex& c, StabilizationOptions opts) {
  require_valid(c);
  auto s = stabilize(mirror(c), opts);
  return {-s.value, -s.n_used, s.verified};
}

InvariantProfile profile(const CfkComplex& c, int n_min, int n_max, StabilizationOptions opts) {
  if (n_min > n_max) throw std::invalid_argument("n_min > n_max");
  require_valid(c);

  InvariantProfile p;
  p.name = c.name;
  p.tau = nu_n_unchecked(c, 0).value;
  for (int n = n_min; n <= n_max; ++n) p.entries.emplace(n, nu_n_unchecked(c, n));
  p.nu_plus = stabilize(c, opts);
  {
    auto s = stabilize(mirror(c), opts);
    p.nu_plus_prime = {-s.value, -s.n_used, s.verified};
  }
  p.stabilization_verified = p.nu_plus.verified && p.nu_plus_prime.verified;

  auto diagnose = [&](const std::string& msg) { p.diagnostics.push_back(msg); };
  const NuResult* prev = nullptr;
  for (const auto& [n, r] : p.entries) {
    if (prev && prev->n + 1 == n && prev->value > r.value) {
      std::ostringstream msg;
      msg << "monotonicity violated: nu_" << prev->n << " = " << prev->value << " > nu_" << n
          << " = " << r.value;
      diagnose(msg.str());
    }
    if (r.value > p.nu_plus.value || r.value < p.nu_plus_prime.value) {
      std::ostringstream msg;
      msg << "boundedness violated at n = " << n << ": " << r.value << " outside ["
          << p.nu_plus_prime.value << ", " << p.nu_plus.value << "]";
      diagnose(msg.str());
    }
    prev = &r;
  }
  return p;
}

}  // namespace cfk
