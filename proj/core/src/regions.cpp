#include "cfk/regions.hpp"

#include <algorithm>
#include <stdexcept>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

// Window membership reduces to a contiguous translate range per generator:
// for MaxWindow the defining quantity is max(t, t + A - s) = t + max(0, A-s),
// for MinWindow it is t + min(0, A-s), for ColumnWindow it is t.
long long window_offset(const Window& w, const Generator& g) {
  const long long d = static_cast<long long>(g.alexander) - w.s;
  switch (w.kind) {
    case WindowKind::MaxWindow: return std::max<long long>(0, d);
    case WindowKind::MinWindow: return std::min<long long>(0, d);
    case WindowKind::ColumnWindow: return 0;
  }
  return 0;
}

}  // namespace

int window_first_translate(const Window& w, const Generator& g) {
  return static_cast<int>(-window_offset(w, g));
}

bool window_contains(const Window& w, const Generator& g, int t) {
  const long long v = t + window_offset(w, g);
  return 0 <= v && v <= w.n - 1;
}

std::optional<std::size_t> RegionComplex::find(std::size_t gen_index, int t) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].gen_index == gen_index && basis[i].t == t) return i;
  return std::nullopt;
}

std::optional<std::size_t> RegionComplex::find(const std::string& generator, int t) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].generator == generator && basis[i].t == t) return i;
  return std::nullopt;
}

RegionComplex extract(const CfkComplex& c, const Window& w) {
  if (w.n < 1) throw std::invalid_argument("window truncation depth must be >= 1");

  const std::size_t g_count = c.generators.size();
  const int n = w.n;

  std::vector<int> first(g_count);
  for (std::size_t g = 0; g < g_count; ++g) first[g] = window_first_translate(w, c.generators[g]);

  RegionComplex r;
  r.window = w;
  r.source = c.name;
  r.basis.reserve(g_count * n);
  r.maslov.reserve(g_count * n);
  for (std::size_t g = 0; g < g_count; ++g)
    for (int k = 0; k < n; ++k) {
      const int t = first[g] + k;
      r.basis.push_back({g, c.generators[g].id, t});
      r.maslov.push_back(c.generators[g].maslov + 2 * t);
    }

  auto index = [&](std::size_t g, int t) { return g * n + static_cast<std::size_t>(t - first[g]); };

  r.boundary = f2::Matrix(r.basis.size(), r.basis.size());
  for (const auto& term : c.indexed_terms()) {
    for (int k = 0; k < n; ++k) {
      const int t = first[term.from] + k;
      const long long tt = static_cast<long long>(t) - term.u_power;
      // Arrows leaving the window are discarded (subquotient differential).
      if (tt < first[term.to] || tt >= first[term.to] + n) continue;
      r.boundary.flip(index(term.to, static_cast<int>(tt)), index(term.from, t));
    }
  }
  return r;
}

RegionComplex vertical_complex(const CfkComplex& c) {
  return extract(c, Window{WindowKind::ColumnWindow, 0, 1});
}

ChainMap chain_map_pos(const CfkComplex& c, int s, int n) {
  ChainMap f;
  f.domain = extract(c, Window{WindowKind::MaxWindow, s, n});
  f.codomain = extract(c, Window{WindowKind::ColumnWindow, 0, n});
  f.matrix = f2::Matrix(f.codomain.dim(), f.domain.dim());
  for (std::size_t i = 0; i < f.domain.basis.size(); ++i) {
    const auto& e = f.domain.basis[i];
    if (e.t < 0 || e.t > n - 1) continue;
    f.matrix.set(e.gen_index * n + static_cast<std::size_t>(e.t), i, true);
  }
  return f;
}

ChainMap chain_map_neg(const CfkComplex& c, int s, int n) {
  ChainMap f;
  f.domain = extract(c, Window{WindowKind::ColumnWindow, 0, n});
  f.codomain = extract(c, Window{WindowKind::MinWindow, s, n});
  f.matrix = f2::Matrix(f.codomain.dim(), f.domain.dim());
  for (std::size_t i = 0; i < f.domain.basis.size(); ++i) {
    const auto& e = f.domain.basis[i];
    const auto& g = c.generators[e.gen_index];
    if (!window_contains(f.codomain.window, g, e.t)) continue;
    const int ft = window_first_translate(f.codomain.window, g);
    f.matrix.set(e.gen_index * n + static_cast<std::size_t>(e.t - ft), i, true);
  }
  return f;
}

}  // namespace cfk
