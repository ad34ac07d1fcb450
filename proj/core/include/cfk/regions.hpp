#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfk/complex.hpp"
#include "cfk/f2.hpp"

// Finite subquotient complexes cut out of the lattice of U-translates:
//   MaxWindow    A^n_s  = C{ 0 <= max(i, j-s) <= n-1 }
//   MinWindow    A^-n_s = C{ 0 <= min(i, j-s) <= n-1 }
//   ColumnWindow B^n    = C{ 0 <= i <= n-1 }
// and the quotient-then-include chain maps v^n_s between them.

namespace cfk {

enum class WindowKind { MaxWindow, MinWindow, ColumnWindow };

struct Window {
  WindowKind kind = WindowKind::ColumnWindow;
  int s = 0;  // Alexander parameter; ignored for ColumnWindow
  int n = 1;  // truncation depth, >= 1
};

/// The element U^{-t} x, at lattice position (t, t + A(x)), Maslov M(x) + 2t.
struct LatticeBasisElement {
  std::size_t gen_index = 0;
  std::string generator;
  int t = 0;
};

struct RegionComplex {
  std::vector<LatticeBasisElement> basis;
  f2::Matrix boundary;  // entry (r, c): basis[r] appears in d basis[c]
  std::vector<int> maslov;
  Window window;
  std::string source;

  std::optional<std::size_t> find(std::size_t gen_index, int t) const;
  std::optional<std::size_t> find(const std::string& generator, int t) const;
  std::size_t dim() const { return basis.size(); }
};

/// Smallest translate index of `g` inside the window (the window always
/// admits exactly n consecutive translates per generator).
int window_first_translate(const Window& w, const Generator& g);

bool window_contains(const Window& w, const Generator& g, int t);

RegionComplex extract(const CfkComplex& c, const Window& w);

/// The i = 0 column with its u_power = 0 arrows: extract(c, ColumnWindow n=1).
RegionComplex vertical_complex(const CfkComplex& c);

struct ChainMap {
  RegionComplex domain;
  RegionComplex codomain;
  f2::Matrix matrix;
};

/// v^n_s : A^n_s -> B^n, identity on shared basis names, zero elsewhere.
ChainMap chain_map_pos(const CfkComplex& c, int s, int n);

/// v^{-n}_s : B^n -> A^{-n}_s, identity on shared basis names, zero elsewhere.
ChainMap chain_map_neg(const CfkComplex& c, int s, int n);

}  // namespace cfk
