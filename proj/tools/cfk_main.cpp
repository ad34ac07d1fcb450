// Command-line driver for the concordance-invariant calculator.
//
// Exit codes: 0 success, 1 validation failure, 2 parse/schema error, 3 usage.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfk/builders.hpp"
#include "cfk/complex.hpp"
#include "cfk/errors.hpp"
#include "cfk/invariants.hpp"
#include "cfk/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 3;

cfk::CfkComplex load_validated(const std::string& path) {
  auto parsed = cfk::parse_complex_file(path);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  auto report = cfk::validate(parsed.complex, parsed.allow_non_knot);
  if (!report.valid) {
    for (const auto& v : report.violations)
      std::cerr << cfk::to_string(v.kind) << ": " << v.detail << "\n";
    throw cfk::InvalidComplexError("validation failed for '" + path + "'");
  }
  return parsed.complex;
}

std::vector<int> parse_steps_csv(const std::string& csv) {
  std::vector<int> steps;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string item = csv.substr(pos, comma == std::string::npos ? csv.size() - pos : comma - pos);
    try {
      steps.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--steps", "'" + item + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return steps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concordance invariants of bifiltered knot Floer chain complexes"};
  app.require_subcommand(1);

  std::string file, file2, out_path;
  int nu_index = 0;
  int n_min = -8, n_max = 8;
  std::string format = "tsv";
  cfk::StabilizationOptions stab;

  auto* cmd_check = app.add_subcommand("check", "validate a complex file");
  cmd_check->add_option("FILE", file)->required();

  auto* cmd_tau = app.add_subcommand("tau", "print tau");
  cmd_tau->add_option("FILE", file)->required();

  auto* cmd_nu = app.add_subcommand("nu", "print nu_n");
  cmd_nu->add_option("FILE", file)->required();
  cmd_nu->add_option("--n", nu_index, "index n")->required();

  auto* cmd_inv = app.add_subcommand("invariants", "print the full profile");
  cmd_inv->add_option("FILE", file)->required();
  cmd_inv->add_option("--n-min", n_min);
  cmd_inv->add_option("--n-max", n_max);
  cmd_inv->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  cmd_inv->add_option("--plateau", stab.plateau)->check(CLI::PositiveNumber);
  cmd_inv->add_option("--n-cap", stab.n_cap)->check(CLI::PositiveNumber);

  auto* cmd_build = app.add_subcommand("build", "write a model complex");
  cmd_build->require_subcommand(1);
  std::string steps_csv;
  int torus_p = 0, torus_q = 0, thin_tau = 0, box_alexander = 0, box_maslov = 0;
  auto* b_stair = cmd_build->add_subcommand("staircase");
  b_stair->add_option("--steps", steps_csv, "comma-separated step widths")->required();
  auto* b_torus = cmd_build->add_subcommand("torus");
  b_torus->add_option("--p", torus_p)->required();
  b_torus->add_option("--q", torus_q)->required();
  auto* b_thin = cmd_build->add_subcommand("thin");
  b_thin->add_option("--tau", thin_tau)->required();
  auto* b_box = cmd_build->add_subcommand("box");
  b_box->add_option("--alexander", box_alexander);
  b_box->add_option("--maslov", box_maslov);
  auto* b_unknot = cmd_build->add_subcommand("unknot");
  for (auto* sub : {b_stair, b_torus, b_thin, b_box, b_unknot})
    sub->add_option("-o,--output", out_path)->required();

  auto* cmd_mirror = app.add_subcommand("mirror", "write the mirror complex");
  cmd_mirror->add_option("FILE", file)->required();
  cmd_mirror->add_option("-o,--output", out_path)->required();

  auto* cmd_tensor = app.add_subcommand("tensor", "write the tensor product");
  cmd_tensor->add_option("FILE", file)->required();
  cmd_tensor->add_option("FILE2", file2)->required();
  cmd_tensor->add_option("-o,--output", out_path)->required();

  auto* cmd_sum = app.add_subcommand("sum", "write the direct sum");
  cmd_sum->add_option("FILE", file)->required();
  cmd_sum->add_option("FILE2", file2)->required();
  cmd_sum->add_option("-o,--output", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_check) {
      (void)load_validated(file);
      std::cout << "ok\n";
      return kExitOk;
    }
    if (*cmd_tau) {
      std::cout << cfk::tau(load_validated(file)) << "\n";
      return kExitOk;
    }
    if (*cmd_nu) {
      std::cout << cfk::nu_n(load_validated(file), nu_index).value << "\n";
      return kExitOk;
    }
    if (*cmd_inv) {
      auto p = cfk::profile(load_validated(file), n_min, n_max, stab);
      std::cout << (format == "json" ? cfk::profile_to_json(p) : cfk::profile_to_tsv(p));
      return kExitOk;
    }
    if (*cmd_build) {
      cfk::CfkComplex c;
      bool non_knot = false;
      if (*b_stair) {
        c = cfk::staircase(parse_steps_csv(steps_csv));
      } else if (*b_torus) {
        c = cfk::torus(torus_p, torus_q);
      } else if (*b_thin) {
        c = cfk::thin_model(thin_tau);
      } else if (*b_box) {
        c = cfk::box(box_alexander, box_maslov);
        non_knot = true;
      } else {
        c = cfk::unknot();
      }
      cfk::write_complex_file(out_path, c, non_knot);
      return kExitOk;
    }
    if (*cmd_mirror) {
      auto parsed = cfk::parse_complex_file(file);
      cfk::require_valid(parsed.complex, parsed.allow_non_knot);
      cfk::write_complex_file(out_path, cfk::mirror(parsed.complex), parsed.allow_non_knot);
      return kExitOk;
    }
    if (*cmd_tensor) {
      auto a = cfk::parse_complex_file(file);
      auto b = cfk::parse_complex_file(file2);
      cfk::require_valid(a.complex, a.allow_non_knot);
      cfk::require_valid(b.complex, b.allow_non_knot);
      cfk::write_complex_file(out_path, cfk::tensor(a.complex, b.complex),
                              a.allow_non_knot || b.allow_non_knot);
      return kExitOk;
    }
    if (*cmd_sum) {
      auto a = cfk::parse_complex_file(file);
      auto b = cfk::parse_complex_file(file2);
      const auto sum = cfk::direct_sum(a.complex, b.complex);
      const bool non_knot = a.allow_non_knot && b.allow_non_knot;
      cfk::require_valid(sum, non_knot);
      cfk::write_complex_file(out_path, sum, non_knot);
      return kExitOk;
    }
  } catch (const cfk::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cfk::InvalidComplexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
