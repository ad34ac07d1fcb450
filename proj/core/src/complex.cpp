#include "cfk/complex.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cfk/errors.hpp"
#include "cfk/homology.hpp"
#include "cfk/regions.hpp"

namespace cfk {

void CfkComplex::reduce_mod2() {
  std::sort(differential.begin(), differential.end());
  std::vector<DiffTerm> reduced;
  for (std::size_t i = 0; i < differential.size();) {
    std::size_t j = i;
    while (j < differential.size() && differential[j] == differential[i]) ++j;
    if ((j - i) % 2 == 1) reduced.push_back(differential[i]);
    i = j;
  }
  differential = std::move(reduced);
}

std::optional<std::size_t> CfkComplex::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].id == id) return i;
  return std::nullopt;
}

std::vector<IndexedTerm> CfkComplex::indexed_terms() const {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < generators.size(); ++i) index.emplace(generators[i].id, i);
  std::vector<IndexedTerm> out;
  out.reserve(differential.size());
  for (const auto& t : differential) {
    auto f = index.find(t.from);
    auto g = index.find(t.to);
    if (f == index.end() || g == index.end()) continue;
    out.push_back({f->second, g->second, t.u_power});
  }
  return out;
}

int CfkComplex::min_alexander() const {
  int m = 0;
  bool first = true;
  for (const auto& g : generators) {
    if (first || g.alexander < m) m = g.alexander;
    first = false;
  }
  return m;
}

int CfkComplex::max_alexander() const {
  int m = 0;
  bool first = true;
  for (const auto& g : generators) {
    if (first || g.alexander > m) m = g.alexander;
    first = false;
  }
  return m;
}

long long CfkComplex::max_u_power() const {
  long long m = 0;
  for (const auto& t : differential) m = std::max(m, t.u_power);
  return m;
}

long long CfkComplex::breadth() const {
  return static_cast<long long>(max_alexander()) - min_alexander() + max_u_power();
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::NegativeUPower: return "NegativeUPower";
    case ViolationKind::FiltrationViolation: return "FiltrationViolation";
    case ViolationKind::MaslovViolation: return "MaslovViolation";
    case ViolationKind::DSquaredNonzero: return "DSquaredNonzero";
    case ViolationKind::VerticalHomologyWrong: return "VerticalHomologyWrong";
  }
  return "?";
}

ValidationReport validate(const CfkComplex& c, bool allow_non_knot) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string detail) {
    report.violations.push_back({kind, std::move(detail)});
  };

  std::set<std::string> ids;
  for (const auto& g : c.generators)
    if (!ids.insert(g.id).second) add(ViolationKind::DuplicateId, "generator id '" + g.id + "'");

  std::unordered_map<std::string, const Generator*> by_id;
  for (const auto& g : c.generators) by_id.emplace(g.id, &g);

  bool structural_ok = report.violations.empty();
  for (const auto& t : c.differential) {
    auto f = by_id.find(t.from);
    auto g = by_id.find(t.to);
    if (f == by_id.end() || g == by_id.end()) {
      add(ViolationKind::FiltrationViolation,
          "term " + t.from + " -> " + t.to + " references an unknown generator");
      structural_ok = false;
      continue;
    }
    if (t.u_power < 0) {
      add(ViolationKind::NegativeUPower,
          "term " + t.from + " -> " + t.to + " has u_power " + std::to_string(t.u_power));
      structural_ok = false;
    }
    if (t.u_power + f->second->alexander - g->second->alexander < 0) {
      add(ViolationKind::FiltrationViolation,
          "term " + t.from + " -> " + t.to + " raises the Alexander filtration");
      structural_ok = false;
    }
    if (g->second->maslov - 2 * t.u_power != f->second->maslov - 1) {
      add(ViolationKind::MaslovViolation,
          "term " + t.from + " -> " + t.to + " does not drop Maslov by 1");
      structural_ok = false;
    }
  }

  if (structural_ok) {
    // d^2 = 0: two-step paths with equal total U-power must cancel in pairs.
    auto terms = c.indexed_terms();
    std::vector<std::vector<std::pair<std::size_t, long long>>> out(c.generators.size());
    for (const auto& t : terms) out[t.from].emplace_back(t.to, t.u_power);
    for (std::size_t x = 0; x < c.generators.size(); ++x) {
      std::map<std::pair<std::size_t, long long>, int> parity;
      for (const auto& [y, a] : out[x])
        for (const auto& [z, b] : out[y]) parity[{z, a + b}] ^= 1;
      for (const auto& [key, p] : parity) {
        if (!p) continue;
        std::ostringstream msg;
        msg << "d^2(" << c.generators[x].id << ") contains U^" << key.second << " "
            << c.generators[key.first].id;
        add(ViolationKind::DSquaredNonzero, msg.str());
      }
    }
  }

  if (report.violations.empty() && !allow_non_knot) {
    auto dims = graded_homology_dims(vertical_complex(c));
    const bool knot = dims.size() == 1 && dims.count(0) == 1 && dims.at(0) == 1;
    if (!knot) {
      std::ostringstream msg;
      msg << "vertical homology is not F_2 at Maslov 0 (dims:";
      for (const auto& [m, d] : dims) msg << " " << m << ":" << d;
      msg << ")";
      add(ViolationKind::VerticalHomologyWrong, msg.str());
    }
  }

  report.valid = report.violations.empty();
  return report;
}

void require_valid(const CfkComplex& c, bool allow_non_knot) {
  auto report = validate(c, allow_non_knot);
  if (report.valid) return;
  std::ostringstream msg;
  msg << "complex '" << c.name << "' is invalid:";
  for (const auto& v : report.violations)
    msg << " [" << to_string(v.kind) << "] " << v.detail << ";";
  throw InvalidComplexError(msg.str());
}

CfkComplex mirror(const CfkComplex& c) {
  require_valid(c, true);
  CfkComplex out;
  out.name = "mirror(" + c.name + ")";
  out.generators.reserve(c.generators.size());
  for (const auto& g : c.generators)
    out.generators.push_back({g.id + "*", -g.alexander, -g.maslov});
  for (const auto& t : c.differential)
    out.differential.push_back({t.to + "*", t.from + "*", t.u_power});
  out.reduce_mod2();
  return out;
}

CfkComplex tensor(const CfkComplex& a, const CfkComplex& b) {
  require_valid(a, true);
  require_valid(b, true);
  CfkComplex out;
  out.name = a.name + "#" + b.name;
  auto pair_id = [](const std::string& x, const std::string& y) { return x + "|" + y; };
  for (const auto& ga : a.generators)
    for (const auto& gb : b.generators)
      out.generators.push_back(
          {pair_id(ga.id, gb.id), ga.alexander + gb.alexander, ga.maslov + gb.maslov});
  for (const auto& t : a.differential)
    for (const auto& gb : b.generators)
      out.differential.push_back({pair_id(t.from, gb.id), pair_id(t.to, gb.id), t.u_power});
  for (const auto& ga : a.generators)
    for (const auto& t : b.differential)
      out.differential.push_back({pair_id(ga.id, t.from), pair_id(ga.id, t.to), t.u_power});
  out.reduce_mod2();
  return out;
}

CfkComplex direct_sum(const CfkComplex& a, const CfkComplex& b) {
  CfkComplex out;
  out.name = a.name + "+" + b.name;
  out.generators = a.generators;
  out.differential = a.differential;

  std::set<std::string> taken;
  for (const auto& g : a.generators) taken.insert(g.id);
  std::unordered_map<std::string, std::string> rename;
  for (const auto& g : b.generators) {
    std::string id = g.id;
    int suffix = 2;
    while (taken.count(id)) id = g.id + "_" + std::to_string(suffix++);
    taken.insert(id);
    rename.emplace(g.id, id);
    out.generators.push_back({id, g.alexander, g.maslov});
  }
  for (const auto& t : b.differential) {
    auto f = rename.find(t.from);
    auto g = rename.find(t.to);
    out.differential.push_back({f == rename.end() ? t.from : f->second,
                                g == rename.end() ? t.to : g->second, t.u_power});
  }
  out.reduce_mod2();
  return out;
}

bool isomorphic_by_order(const CfkComplex& a, const CfkComplex& b) {
  if (a.generators.size() != b.generators.size()) return false;
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    if (a.generators[i].alexander != b.generators[i].alexander) return false;
    if (a.generators[i].maslov != b.generators[i].maslov) return false;
  }
  auto key = [](const CfkComplex& c) {
    auto terms = c.indexed_terms();
    std::vector<std::tuple<std::size_t, std::size_t, long long>> k;
    k.reserve(terms.size());
    for (const auto& t : terms) k.emplace_back(t.from, t.to, t.u_power);
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(a) == key(b);
}

}  // namespace cfk
