#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Bifiltered knot Floer chain complexes over F_2[U, U^-1], in the canonical
// presentation: generator x sits at lattice position (0, A(x)) and a term
// U^a y in dx encodes the arrow [x, 0, A(x)] -> [y, -a, A(y) - a].

namespace cfk {

struct Generator {
  std::string id;
  int alexander = 0;
  int maslov = 0;

  bool operator==(const Generator&) const = default;
};

struct DiffTerm {
  std::string from;
  std::string to;
  long long u_power = 0;

  auto operator<=>(const DiffTerm&) const = default;
};

struct IndexedTerm {
  std::size_t from = 0;
  std::size_t to = 0;
  long long u_power = 0;
};

struct CfkComplex {
  std::string name;
  std::vector<Generator> generators;
  std::vector<DiffTerm> differential;  // reduced mod 2, sorted

  /// Sorts the differential and cancels duplicate triples pairwise.
  void reduce_mod2();

  std::optional<std::size_t> index_of(const std::string& id) const;

  /// Differential with generator names resolved to indices.
  /// Terms whose endpoints do not resolve are skipped.
  std::vector<IndexedTerm> indexed_terms() const;

  int min_alexander() const;  // 0 for the empty complex
  int max_alexander() const;
  long long max_u_power() const;

  /// (max A - min A) + max u_power; controls stabilization detection.
  long long breadth() const;

  bool operator==(const CfkComplex&) const = default;
};

enum class ViolationKind {
  DuplicateId,
  NegativeUPower,
  FiltrationViolation,
  MaslovViolation,
  DSquaredNonzero,
  VerticalHomologyWrong,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  bool valid = false;
  std::vector<Violation> violations;
};

/// Checks every structural axiom; with allow_non_knot the vertical-homology
/// (knot) condition is skipped so acyclic summands such as boxes pass.
ValidationReport validate(const CfkComplex& c, bool allow_non_knot = false);

/// Throws InvalidComplexError with the report's first violations on failure.
void require_valid(const CfkComplex& c, bool allow_non_knot = false);

/// Dual complex: gradings negate, arrows reverse keeping their U-power.
CfkComplex mirror(const CfkComplex& c);

/// Tensor product over F_2[U, U^-1] (connected sum); Leibniz differential.
CfkComplex tensor(const CfkComplex& a, const CfkComplex& b);

/// Disjoint union; colliding ids in b are suffixed deterministically.
CfkComplex direct_sum(const CfkComplex& a, const CfkComplex& b);

/// True when the complexes agree generator-by-generator in declaration order
/// (gradings and index-resolved differentials), ignoring names.
bool isomorphic_by_order(const CfkComplex& a, const CfkComplex& b);

}  // namespace cfk
