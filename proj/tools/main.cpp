#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sasaki/report.hpp"

namespace {

using namespace sasaki;

constexpr const char* kFixtureEnv = "SASAKI_AUDIT_FIXTURE";

// Exit 2 on any input problem.
InstanceBundle load_bundle(const std::string& manifest_path) {
  if (const char* name = std::getenv(kFixtureEnv); name && *name) {
    auto fx = fixture_by_name(name);
    if (!fx) {
      std::cerr << "error: unknown fixture \"" << name << "\"\n";
      std::exit(2);
    }
    return {manifest_from_fixture(*fx), fx};
  }
  if (manifest_path.empty()) {
    std::cerr << "error: no manifest file given and " << kFixtureEnv
              << " is not set\n";
    std::exit(2);
  }
  std::ifstream f(manifest_path);
  if (!f) {
    std::cerr << "error: cannot open \"" << manifest_path << "\"\n";
    std::exit(2);
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    return {parse_manifest(buf.str()), std::nullopt};
  } catch (const ParseError& e) {
    std::cerr << "error: " << manifest_path << e.what() << "\n";
    std::exit(2);
  }
}

VectorField parse_potential(const std::string& text) {
  VectorField V;
  std::stringstream ss(text);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, ',')) {
    if (i >= kDim) break;
    V.v[i++] = parse_rational(part);
  }
  if (i != kDim) throw ParseError("potential needs 3 comma-separated rationals");
  return V;
}

int emit(const CommandResult& res) {
  std::cout << res.output;
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic audit of eta-Einstein solitons on "
               "trans-Sasakian 3-frames"};
  app.require_subcommand(1);

  std::string manifest_path;
  std::string format_name = "text";
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("manifest", manifest_path, "JSON manifest file");
    cmd->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* c_validate = app.add_subcommand("validate", "check frame, metric and contact axioms");
  auto* c_geometry = app.add_subcommand("geometry", "connection, curvature, Ricci tables");
  auto* c_detect = app.add_subcommand("detect", "detect the trans-Sasakian constants");
  auto* c_soliton = app.add_subcommand("soliton", "soliton solve / check");
  c_soliton->require_subcommand(1);
  auto* c_solve = c_soliton->add_subcommand("solve", "solve for (lambda, mu)");
  auto* c_check = c_soliton->add_subcommand("check", "evaluate the residual");
  auto* c_theorems = app.add_subcommand("theorems", "audit the numbered results");
  auto* c_report = app.add_subcommand("report", "full bundle");

  std::string lambda_text, mu_text, potential_text, id_text;
  for (CLI::App* cmd : {c_validate, c_geometry, c_detect, c_solve, c_check,
                        c_theorems, c_report})
    add_common(cmd);
  c_check->add_option("--lambda", lambda_text, "lambda as p/q")->required();
  c_check->add_option("--mu", mu_text, "mu as p/q")->required();
  c_solve->add_option("--potential", potential_text, "potential field a,b,c");
  c_check->add_option("--potential", potential_text, "potential field a,b,c");
  c_theorems->add_option("--id", id_text, "single theorem id (e.g. T5.1)");

  CLI11_PARSE(app, argc, argv);

  const Format fmt = format_name == "json" ? Format::json : Format::text;
  InstanceBundle bundle = load_bundle(manifest_path);

  std::optional<VectorField> potential;
  try {
    if (!potential_text.empty()) potential = parse_potential(potential_text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (c_validate->parsed()) return emit(cmd_validate(bundle, fmt));
  if (c_geometry->parsed()) return emit(cmd_geometry(bundle, fmt));
  if (c_detect->parsed()) return emit(cmd_detect(bundle, fmt));
  if (c_solve->parsed()) return emit(cmd_soliton_solve(bundle, potential, fmt));
  if (c_check->parsed()) {
    try {
      return emit(cmd_soliton_check(bundle, parse_rational(lambda_text),
                                    parse_rational(mu_text), potential, fmt));
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  if (c_theorems->parsed()) {
    std::optional<TheoremId> only;
    if (!id_text.empty()) {
      only = theorem_from_name(id_text);
      if (!only) {
        std::cerr << "error: unknown theorem id \"" << id_text << "\"\n";
        return 2;
      }
    }
    return emit(cmd_theorems(bundle, only, fmt));
  }
  if (c_report->parsed()) return emit(cmd_report(bundle, fmt));
  return 2;
}
