#pragma once

#include <optional>
#include <string>

#include "sasaki/harness.hpp"

namespace sasaki {

// Parsed instance description. Brackets not listed are zero; eta is never
// supplied, always derived as g(., xi).
struct Manifest {
  StructureConstants c;
  FrameMetric g;
  Mat3 phi{};
  VectorField xi;  // defaults to e3
  std::optional<Rational> soliton_lambda;
  std::optional<Rational> soliton_mu;
  std::optional<VectorField> soliton_potential;
};

// Parses the JSON manifest document. Throws ParseError with a JSON-path
// location on malformed input.
Manifest parse_manifest(const std::string& json_text);

Manifest manifest_from_fixture(const Fixture& fx);

}  // namespace sasaki
