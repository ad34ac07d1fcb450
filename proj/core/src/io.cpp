#include "cfk/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

using json = nlohmann::ordered_json;

long long require_int(const json& j, const std::string& context) {
  if (!j.is_number_integer())
    throw ParseError(context + " must be an integer");
  return j.get<long long>();
}

std::string require_string(const json& j, const std::string& context) {
  if (!j.is_string()) throw ParseError(context + " must be a string");
  return j.get<std::string>();
}

}  // namespace

ParsedComplex parse_complex(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");

  ParsedComplex out;
  out.complex.name = doc.contains("name") ? require_string(doc["name"], "name") : "";
  if (doc.contains("allow_non_knot")) {
    if (!doc["allow_non_knot"].is_boolean()) throw ParseError("allow_non_knot must be a boolean");
    out.allow_non_knot = doc["allow_non_knot"].get<bool>();
  }

  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError("missing generators array");
  if (!doc.contains("differential") || !doc["differential"].is_array())
    throw ParseError("missing differential array");

  std::map<std::string, long long> position_i;  // generators transcribed from figures
  for (const auto& jg : doc["generators"]) {
    if (!jg.is_object()) throw ParseError("generator entries must be objects");
    Generator g;
    if (!jg.contains("id")) throw ParseError("generator missing id");
    g.id = require_string(jg["id"], "generator id");
    if (jg.contains("position")) {
      const auto& pos = jg["position"];
      if (!pos.is_array() || pos.size() != 2)
        throw ParseError("position of '" + g.id + "' must be [i, j]");
      const long long i = require_int(pos[0], "position i of '" + g.id + "'");
      const long long j = require_int(pos[1], "position j of '" + g.id + "'");
      g.alexander = static_cast<int>(j - i);
      position_i[g.id] = i;
      if (jg.contains("alexander") &&
          require_int(jg["alexander"], "alexander of '" + g.id + "'") != g.alexander)
        throw ParseError("alexander of '" + g.id + "' disagrees with its position");
    } else if (jg.contains("alexander")) {
      g.alexander = static_cast<int>(require_int(jg["alexander"], "alexander of '" + g.id + "'"));
    } else {
      throw ParseError("generator '" + g.id + "' needs alexander or position");
    }
    if (!jg.contains("maslov")) throw ParseError("generator '" + g.id + "' missing maslov");
    g.maslov = static_cast<int>(require_int(jg["maslov"], "maslov of '" + g.id + "'"));
    out.complex.generators.push_back(std::move(g));
  }

  for (const auto& jt : doc["differential"]) {
    if (!jt.is_object()) throw ParseError("differential entries must be objects");
    DiffTerm t;
    if (!jt.contains("from")) throw ParseError("differential term missing from");
    if (!jt.contains("to")) throw ParseError("differential term missing to");
    t.from = require_string(jt["from"], "term from");
    t.to = require_string(jt["to"], "term to");
    if (!out.complex.index_of(t.from))
      throw ParseError("differential references unknown generator '" + t.from + "'");
    if (!out.complex.index_of(t.to))
      throw ParseError("differential references unknown generator '" + t.to + "'");
    if (jt.contains("u_power")) {
      t.u_power = require_int(jt["u_power"], "u_power of " + t.from + " -> " + t.to);
      if (t.u_power < 0)
        throw ParseError("u_power of " + t.from + " -> " + t.to + " must be nonnegative");
    } else if (position_i.count(t.from) && position_i.count(t.to)) {
      t.u_power = position_i[t.from] - position_i[t.to];
      if (t.u_power < 0)
        throw ParseError("positions give a negative u_power for " + t.from + " -> " + t.to);
    } else {
      throw ParseError("term " + t.from + " -> " + t.to + " missing u_power");
    }
    out.complex.differential.push_back(std::move(t));
  }

  const std::size_t before = out.complex.differential.size();
  out.complex.reduce_mod2();
  if (out.complex.differential.size() != before) {
    std::ostringstream warning;
    warning << "duplicate differential entries reduced mod 2 (" << before << " -> "
            << out.complex.differential.size() << " terms)";
    out.warnings.push_back(warning.str());
  }
  return out;
}

ParsedComplex parse_complex_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

std::string serialize_complex(const CfkComplex& c, bool allow_non_knot) {
  json doc;
  doc["name"] = c.name;
  doc["generators"] = json::array();
  for (const auto& g : c.generators)
    doc["generators"].push_back({{"id", g.id}, {"alexander", g.alexander}, {"maslov", g.maslov}});
  doc["differential"] = json::array();
  for (const auto& t : c.differential)
    doc["differential"].push_back({{"from", t.from}, {"to", t.to}, {"u_power", t.u_power}});
  if (allow_non_knot) doc["allow_non_knot"] = true;
  return doc.dump(2) + "\n";
}

void write_complex_file(const std::filesystem::path& path, const CfkComplex& c,
                        bool allow_non_knot) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << serialize_complex(c, allow_non_knot);
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string profile_to_tsv(const InvariantProfile& p) {
  std::ostringstream out;
  out << "# tau=" << p.tau << "\n";
  out << "# nu_plus=" << p.nu_plus.value << " (n_used=" << p.nu_plus.n_used
      << ", verified=" << bool_str(p.nu_plus.verified) << ")\n";
  out << "# nu_plus_prime=" << p.nu_plus_prime.value << " (n_used=" << p.nu_plus_prime.n_used
      << ", verified=" << bool_str(p.nu_plus_prime.verified) << ")\n";
  for (const auto& d : p.diagnostics) out << "# diagnostic: " << d << "\n";
  for (const auto& [n, r] : p.entries)
    out << n << "\t" << r.value << "\t" << bool_str(r.monotone_flag) << "\n";
  return out.str();
}

std::string profile_to_json(const InvariantProfile& p) {
  json doc;
  doc["name"] = p.name;
  doc["tau"] = p.tau;
  auto stab = [](const StabilizedValue& s) {
    return json{{"value", s.value}, {"n_used", s.n_used}, {"verified", s.verified}};
  };
  doc["nu_plus"] = stab(p.nu_plus);
  doc["nu_plus_prime"] = stab(p.nu_plus_prime);
  doc["stabilization_verified"] = p.stabilization_verified;
  doc["entries"] = json::array();
  for (const auto& [n, r] : p.entries)
    doc["entries"].push_back({{"n", n},
                              {"value", r.value},
                              {"monotone_flag", r.monotone_flag},
                              {"witness_s_set", r.witness_s_set}});
  doc["diagnostics"] = p.diagnostics;
  return doc.dump(2) + "\n";
}

InvariantProfile parse_profile_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  InvariantProfile p;
  try {
    p.name = doc.at("name").get<std::string>();
    p.tau = doc.at("tau").get<int>();
    auto stab = [](const json& j) {
      return StabilizedValue{j.at("value").get<int>(), j.at("n_used").get<int>(),
                             j.at("verified").get<bool>()};
    };
    p.nu_plus = stab(doc.at("nu_plus"));
    p.nu_plus_prime = stab(doc.at("nu_plus_prime"));
    p.stabilization_verified = doc.at("stabilization_verified").get<bool>();
    for (const auto& je : doc.at("entries")) {
      NuResult r;
      r.n = je.at("n").get<int>();
      r.value = je.at("value").get<int>();
      r.monotone_flag = je.at("monotone_flag").get<bool>();
      r.witness_s_set = je.at("witness_s_set").get<std::vector<int>>();
      p.entries.emplace(r.n, std::move(r));
    }
    p.diagnostics = doc.at("diagnostics").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("profile schema violation: ") + e.what());
  }
  return p;
}

}  // namespace cfk
