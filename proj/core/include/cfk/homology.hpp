#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cfk/f2.hpp"
#include "cfk/regions.hpp"

namespace cfk {

struct HomologySummary {
  std::size_t dim = 0;
  std::vector<f2::Vector> cycle_reps;  // spans a complement of the boundaries
  std::size_t boundary_rank = 0;
  std::size_t cycle_rank = 0;
  // Maslov grading of each representative when homogeneous; diagnostic only.
  std::vector<std::optional<int>> rep_maslov;
};

/// Throws NotAComplexError unless boundary^2 = 0.
HomologySummary homology(const RegionComplex& r);

/// Homology dimension per Maslov grading (zero entries omitted).
std::map<int, std::size_t> graded_homology_dims(const RegionComplex& r);

struct InducedMap {
  f2::Matrix matrix_on_homology;  // H(codomain) x H(domain)
  std::size_t rank = 0;
  bool surjective = false;
  bool injective = false;
};

/// Throws NotChainMapError unless f commutes with the boundaries.
InducedMap induced_map(const ChainMap& f);

}  // namespace cfk
