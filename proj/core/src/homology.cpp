#include "cfk/homology.hpp"

#include <sstream>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

void require_boundary_squares_to_zero(const RegionComplex& r) {
  if (!(r.boundary * r.boundary).is_zero()) {
    std::ostringstream msg;
    msg << "boundary^2 != 0 on region of '" << r.source << "'";
    throw NotAComplexError(msg.str());
  }
}

std::optional<int> homogeneous_maslov(const RegionComplex& r, const f2::Vector& v) {
  std::optional<int> m;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (!v.get(i)) continue;
    if (m && *m != r.maslov[i]) return std::nullopt;
    m = r.maslov[i];
  }
  return m;
}

}  // namespace

HomologySummary homology(const RegionComplex& r) {
  require_boundary_squares_to_zero(r);

  HomologySummary h;
  auto cycles = f2::kernel_basis(r.boundary);
  h.cycle_rank = cycles.size();

  f2::Span span(r.dim());
  for (std::size_t c = 0; c < r.dim(); ++c) span.insert(r.boundary.column(c));
  h.boundary_rank = span.rank();

  for (auto& z : cycles) {
    if (span.insert(z)) {
      h.rep_maslov.push_back(homogeneous_maslov(r, z));
      h.cycle_reps.push_back(std::move(z));
    }
  }
  h.dim = h.cycle_rank - h.boundary_rank;
  return h;
}

std::map<int, std::size_t> graded_homology_dims(const RegionComplex& r) {
  require_boundary_squares_to_zero(r);

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < r.dim(); ++i) by_degree[r.maslov[i]].push_back(i);

  // rank of the boundary restricted to sources of degree m
  auto rank_from_degree = [&](int m) -> std::size_t {
    auto it = by_degree.find(m);
    if (it == by_degree.end()) return 0;
    f2::Span span(r.dim());
    for (auto c : it->second) span.insert(r.boundary.column(c));
    return span.rank();
  };

  std::map<int, std::size_t> dims;
  for (const auto& [m, cols] : by_degree) {
    const std::size_t d = cols.size() - rank_from_degree(m) - rank_from_degree(m + 1);
    if (d) dims[m] = d;
  }
  return dims;
}

InducedMap induced_map(const ChainMap& f) {
  if (f.matrix * f.domain.boundary != f.codomain.boundary * f.matrix)
    throw NotChainMapError("map does not commute with the boundaries");

  const auto hd = homology(f.domain);
  const auto hc = homology(f.codomain);

  // Express each image cycle over [codomain boundaries | codomain reps];
  // the rep coordinates are unique modulo boundaries.
  const std::size_t cod_dim = f.codomain.dim();
  f2::Solver solver(cod_dim, cod_dim + hc.dim);
  for (std::size_t c = 0; c < cod_dim; ++c) solver.add(f.codomain.boundary.column(c));
  for (const auto& z : hc.cycle_reps) solver.add(z);

  InducedMap out;
  out.matrix_on_homology = f2::Matrix(hc.dim, hd.dim);
  for (std::size_t j = 0; j < hd.dim; ++j) {
    auto coords = solver.solve(f.matrix.apply(hd.cycle_reps[j]));
    if (!coords)
      throw NotChainMapError("image of a cycle is not a cycle");  // unreachable
    for (std::size_t i = 0; i < hc.dim; ++i)
      if (coords->get(cod_dim + i)) out.matrix_on_homology.set(i, j, true);
  }
  out.rank = f2::rank(out.matrix_on_homology);
  out.surjective = out.rank == hc.dim;
  out.injective = out.rank == hd.dim;
  return out;
}

}  // namespace cfk
