#pragma once

// Test-only oracles, independent of the library's elimination path.

#include <cstdint>
#include <set>
#include <stdexcept>

#include "cfk/f2.hpp"
#include "cfk/regions.hpp"

namespace cfk::testsupport {

// Homology dimension by exhaustive enumeration over all 2^d chains.
// Counts |ker d| and |im d| directly; only sensible for d <= ~16.
inline std::size_t exhaustive_homology_dim(const RegionComplex& r) {
  const std::size_t d = r.dim();
  if (d > 16) throw std::invalid_argument("exhaustive oracle limited to dim <= 16");

  auto to_vector = [&](std::uint32_t mask) {
    f2::Vector v(d);
    for (std::size_t i = 0; i < d; ++i)
      if ((mask >> i) & 1u) v.set(i, true);
    return v;
  };
  auto to_mask = [&](const f2::Vector& v) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (v.get(i)) mask |= 1u << i;
    return mask;
  };

  std::size_t kernel_count = 0;
  std::set<std::uint32_t> image;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    const auto bd = r.boundary.apply(to_vector(mask));
    if (!bd.any()) ++kernel_count;
    image.insert(to_mask(bd));
  }
  std::size_t log_kernel = 0;
  while ((std::size_t(1) << log_kernel) < kernel_count) ++log_kernel;
  std::size_t log_image = 0;
  while ((std::size_t(1) << log_image) < image.size()) ++log_image;
  return log_kernel - log_image;
}

// Window membership straight from the defining inequalities.
inline bool window_member_reference(const Window& w, int alexander, int t) {
  const long long i = t;
  const long long j = static_cast<long long>(t) + alexander;
  long long q = 0;
  switch (w.kind) {
    case WindowKind::MaxWindow: q = std::max(i, j - w.s); break;
    case WindowKind::MinWindow: q = std::min(i, j - w.s); break;
    case WindowKind::ColumnWindow: q = i; break;
  }
  return 0 <= q && q <= w.n - 1;
}

}  // namespace cfk::testsupport
