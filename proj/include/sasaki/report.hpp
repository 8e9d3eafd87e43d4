#pragma once

#include <optional>
#include <string>

#include "sasaki/manifest.hpp"

namespace sasaki {

enum class Format { text, json };

struct CommandResult {
  std::string output;
  // 0 = success / all-pass, 1 = mathematical violation or no_solution,
  // 2 = input error.
  int exit_code = 0;
};

// A manifest plus, when it came from the built-in library, the fixture it
// was loaded from (carrying any published reference values).
struct InstanceBundle {
  Manifest manifest;
  std::optional<Fixture> fixture;
};

CommandResult cmd_validate(const InstanceBundle& in, Format fmt);
CommandResult cmd_geometry(const InstanceBundle& in, Format fmt);
CommandResult cmd_detect(const InstanceBundle& in, Format fmt);
CommandResult cmd_soliton_solve(const InstanceBundle& in,
                                const std::optional<VectorField>& potential,
                                Format fmt);
CommandResult cmd_soliton_check(const InstanceBundle& in, const Rational& lambda,
                                const Rational& mu,
                                const std::optional<VectorField>& potential,
                                Format fmt);
CommandResult cmd_theorems(const InstanceBundle& in,
                           const std::optional<TheoremId>& only, Format fmt);
CommandResult cmd_report(const InstanceBundle& in, Format fmt);

}  // namespace sasaki
