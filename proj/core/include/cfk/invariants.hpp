#pragma once

#include <map>
#include <string>
#include <vector>

#include "cfk/complex.hpp"

// The concordance invariants: nu_n for all integers n, tau = nu_0, and the
// stabilized values nu_plus (n -> +inf) and nu_plus_prime (n -> -inf).

namespace cfk {

struct NuResult {
  int n = 0;
  int value = 0;
  // Every s in the scan range [min A - 1, max A + 1] where the verdict
  // (surjective for n >= 0, injective for n < 0) holds.
  std::vector<int> witness_s_set;
  // Whether the verdict set is an up-set (n >= 0) or down-set (n < 0)
  // within the scan range.
  bool monotone_flag = false;
};

struct StabilizedValue {
  int value = 0;
  int n_used = 0;
  bool verified = false;
};

struct StabilizationOptions {
  int plateau = 3;  // consecutive equal values required
  int n_cap = 64;   // give up past this depth (verified = false)
};

struct InvariantProfile {
  std::string name;
  int tau = 0;
  std::map<int, NuResult> entries;
  StabilizedValue nu_plus;
  StabilizedValue nu_plus_prime;
  bool stabilization_verified = false;
  std::vector<std::string> diagnostics;  // violated profile invariants, if any
};

/// min{s : the sub-column C{i=0, j<=s} hits the vertical homology class}.
int tau(const CfkComplex& c);

NuResult nu_n(const CfkComplex& c, int n);

StabilizedValue nu_plus(const CfkComplex& c, StabilizationOptions opts = {});
StabilizedValue nu_plus_prime(const CfkComplex& c, StabilizationOptions opts = {});

InvariantProfile profile(const CfkComplex& c, int n_min, int n_max,
                         StabilizationOptions opts = {});

}  // namespace cfk
