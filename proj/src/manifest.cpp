#include "sasaki/manifest.hpp"

#include <json.hpp>

namespace sasaki {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

Rational rational_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected rational as string or integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Mat3 matrix_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != kDim) fail(path, "expected a 3x3 matrix");
  Mat3 m{};
  for (int i = 0; i < kDim; ++i) {
    const json& row = j[i];
    const std::string rpath = path + "/" + std::to_string(i);
    if (!row.is_array() || row.size() != kDim) fail(rpath, "expected 3 entries");
    for (int k = 0; k < kDim; ++k)
      m[i][k] = rational_at(row[k], rpath + "/" + std::to_string(k));
  }
  return m;
}

Vec3 vector_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != kDim) fail(path, "expected 3 entries");
  Vec3 v{};
  for (int k = 0; k < kDim; ++k)
    v[k] = rational_at(j[k], path + "/" + std::to_string(k));
  return v;
}

}  // namespace

Manifest parse_manifest(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("/: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("/", "expected a JSON object");

  Manifest m;
  if (!doc.contains("dimension")) fail("/dimension", "missing");
  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<int>() != kDim)
    fail("/dimension", "dimension must be 3");

  if (doc.contains("brackets")) {
    const json& brackets = doc["brackets"];
    if (!brackets.is_array()) fail("/brackets", "expected an array");
    for (size_t n = 0; n < brackets.size(); ++n) {
      const std::string bpath = "/brackets/" + std::to_string(n);
      const json& b = brackets[n];
      if (!b.is_object() || !b.contains("i") || !b.contains("j") ||
          !b.contains("coeffs"))
        fail(bpath, "expected {i, j, coeffs}");
      auto index = [&](const char* key) {
        const json& v = b[key];
        if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > kDim)
          fail(bpath + "/" + key, "index must be in 1..3");
        return v.get<int>() - 1;
      };
      int i = index("i");
      int j = index("j");
      if (i == j) fail(bpath, "bracket indices must differ");
      Vec3 coeffs = vector_at(b["coeffs"], bpath + "/coeffs");
      for (int k = 0; k < kDim; ++k) {
        m.c.c[i][j][k] = coeffs[k];
        m.c.c[j][i][k] = -coeffs[k];
      }
    }
  }

  if (doc.contains("metric")) m.g.g = matrix_at(doc["metric"], "/metric");

  if (!doc.contains("phi")) fail("/phi", "missing");
  m.phi = matrix_at(doc["phi"], "/phi");

  int xi_index = kDim;
  if (doc.contains("xi")) {
    const json& x = doc["xi"];
    if (!x.is_number_integer() || x.get<int>() < 1 || x.get<int>() > kDim)
      fail("/xi", "index must be in 1..3");
    xi_index = x.get<int>();
  }
  m.xi.v[xi_index - 1] = 1;

  if (doc.contains("soliton")) {
    const json& s = doc["soliton"];
    if (!s.is_object()) fail("/soliton", "expected an object");
    if (s.contains("lambda"))
      m.soliton_lambda = rational_at(s["lambda"], "/soliton/lambda");
    if (s.contains("mu")) m.soliton_mu = rational_at(s["mu"], "/soliton/mu");
    if (s.contains("potential"))
      m.soliton_potential =
          VectorField{vector_at(s["potential"], "/soliton/potential")};
  }
  return m;
}

Manifest manifest_from_fixture(const Fixture& fx) {
  Manifest m;
  m.c = fx.c;
  m.g = fx.g;
  m.phi = fx.phi;
  m.xi = fx.xi;
  return m;
}

}  // namespace sasaki
