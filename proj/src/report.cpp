#include "sasaki/report.hpp"

#include <json.hpp>

#include <sstream>

#include "sasaki/render.hpp"

namespace sasaki {

namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& j) { return j.dump() + "\n"; }

ojson violations_json(const ValidationReport& rep) {
  ojson arr = ojson::array();
  for (const auto& v : rep.violations) {
    ojson item;
    item["rule"] = v.rule;
    ojson idx = ojson::array();
    for (int i : v.idx)
      if (i != 0) idx.push_back(i);
    item["indices"] = idx;
    item["value"] = format_rational(v.value);
    arr.push_back(item);
  }
  return arr;
}

ojson vec_json(const Vec3& v) {
  ojson arr = ojson::array();
  for (const auto& x : v) arr.push_back(format_rational(x));
  return arr;
}

ojson mat_json(const Mat3& m) {
  ojson arr = ojson::array();
  for (const auto& row : m) arr.push_back(vec_json(row));
  return arr;
}

struct DerivedInstance {
  AuditContext ctx;
  std::vector<std::string> notes;
};

// Throws InvalidFrame when the frame or metric fails validation.
DerivedInstance derive(const InstanceBundle& in) {
  DerivedInstance d{AuditContext::build(in.manifest.c, in.manifest.g,
                                        in.manifest.phi, in.manifest.xi),
                    {}};
  if (in.fixture) d.notes = published_discrepancies(*in.fixture, d.ctx);
  return d;
}

CommandResult invalid_frame_result(const InvalidFrame& e, Format fmt) {
  if (fmt == Format::json) {
    ojson j;
    j["error"] = e.what();
    return {dump(j), 1};
  }
  return {std::string("error: ") + e.what() + "\n", 1};
}

void append_identity_report(ojson& j, const IdentityReport& rep) {
  ojson arr = ojson::array();
  for (const auto& c : rep.checks) {
    ojson item;
    item["id"] = c.id;
    item["holds"] = c.holds;
    arr.push_back(item);
  }
  j["identities"] = arr;
}

ojson theorem_json(const TheoremReport& rep) {
  ojson j;
  j["id"] = theorem_name(rep.id);
  j["hypothesis_holds"] = rep.hypothesis_holds;
  if (rep.conclusion_holds)
    j["conclusion_holds"] = *rep.conclusion_holds;
  else
    j["conclusion_holds"] = nullptr;
  ojson w;
  for (const auto& [k, v] : rep.witness) w[k] = format_rational(v);
  j["witness"] = w;
  j["notes"] = rep.notes;
  return j;
}

std::string theorem_text(const TheoremReport& rep) {
  std::ostringstream os;
  os << theorem_name(rep.id) << ": ";
  if (!rep.hypothesis_holds) {
    os << "inapplicable (hypothesis fails)\n";
  } else {
    os << "hypothesis holds; conclusion "
       << (*rep.conclusion_holds ? "holds" : "FAILS") << "\n";
  }
  if (!rep.witness.empty()) {
    os << "  witness:";
    bool first = true;
    for (const auto& [k, v] : rep.witness) {
      os << (first ? " " : ", ") << k << " = " << format_rational(v);
      first = false;
    }
    os << "\n";
  }
  for (const auto& n : rep.notes) os << "  note: " << n << "\n";
  return os.str();
}

bool any_finding(const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports)
    if (r.hypothesis_holds && r.conclusion_holds && !*r.conclusion_holds)
      return true;
  return false;
}

ojson validate_json_body(const InstanceBundle& in) {
  ValidationReport frame = validate_frame(in.manifest.c);
  ValidationReport metric = validate_metric(in.manifest.g);
  AlmostContactData acd =
      AlmostContactData::make(in.manifest.phi, in.manifest.xi, in.manifest.g);
  ValidationReport contact = validate_almost_contact(acd, in.manifest.g);
  ojson j;
  j["command"] = "validate";
  j["frame_valid"] = frame.valid();
  j["frame_violations"] = violations_json(frame);
  j["metric_valid"] = metric.valid();
  j["metric_violations"] = violations_json(metric);
  j["contact_valid"] = contact.valid();
  j["contact_violations"] = violations_json(contact);
  return j;
}

ojson geometry_json_body(const DerivedInstance& d) {
  const AuditContext& ctx = d.ctx;
  ojson j;
  j["command"] = "geometry";
  ojson conn = ojson::array();
  for (int i = 0; i < kDim; ++i) {
    ojson row = ojson::array();
    for (int jj = 0; jj < kDim; ++jj) row.push_back(vec_json(ctx.geom.conn.gamma[i][jj]));
    conn.push_back(row);
  }
  j["connection"] = conn;
  ojson curv = ojson::array();
  for (int i = 0; i < kDim; ++i)
    for (int jj = 0; jj < kDim; ++jj)
      for (int k = 0; k < kDim; ++k) {
        Vec3 v{};
        bool nonzero = false;
        for (int l = 0; l < kDim; ++l) {
          v[l] = ctx.geom.R.r[i][jj][k][l];
          nonzero = nonzero || v[l] != 0;
        }
        if (!nonzero) continue;
        ojson item;
        item["i"] = i + 1;
        item["j"] = jj + 1;
        item["k"] = k + 1;
        item["value"] = vec_json(v);
        curv.push_back(item);
      }
  j["curvature"] = curv;
  j["S"] = mat_json(ctx.geom.ric.S);
  j["Q"] = mat_json(ctx.geom.ric.Q);
  j["r"] = format_rational(ctx.geom.ric.r);
  j["notes"] = d.notes;
  return j;
}

std::string geometry_text_body(const DerivedInstance& d) {
  const AuditContext& ctx = d.ctx;
  std::ostringstream os;
  os << "connection:\n";
  for (int i = 0; i < kDim; ++i)
    for (int jj = 0; jj < kDim; ++jj)
      os << "  nabla_e" << i + 1 << " e" << jj + 1 << " = "
         << format_frame_vector(ctx.geom.conn.gamma[i][jj]) << "\n";
  os << "curvature (nonzero components):\n";
  for (int i = 0; i < kDim; ++i)
    for (int jj = 0; jj < kDim; ++jj)
      for (int k = 0; k < kDim; ++k) {
        Vec3 v{};
        bool nonzero = false;
        for (int l = 0; l < kDim; ++l) {
          v[l] = ctx.geom.R.r[i][jj][k][l];
          nonzero = nonzero || v[l] != 0;
        }
        if (nonzero)
          os << "  R(e" << i + 1 << ",e" << jj + 1 << ")e" << k + 1 << " = "
             << format_frame_vector(v) << "\n";
      }
  os << "ricci:\n";
  for (int i = 0; i < kDim; ++i)
    for (int jj = 0; jj < kDim; ++jj)
      os << "  S[" << i + 1 << "][" << jj + 1
         << "] = " << format_rational(ctx.geom.ric.S[i][jj]) << "\n";
  for (int i = 0; i < kDim; ++i)
    for (int jj = 0; jj < kDim; ++jj)
      os << "  Q[" << i + 1 << "][" << jj + 1
         << "] = " << format_rational(ctx.geom.ric.Q[i][jj]) << "\n";
  os << "r = " << format_rational(ctx.geom.ric.r) << "\n";
  for (const auto& n : d.notes) os << "note: " << n << "\n";
  return os.str();
}

ojson detect_json_body(const AuditContext& ctx) {
  ojson j;
  j["command"] = "detect";
  if (ctx.cls) {
    j["alpha"] = format_rational(ctx.cls->alpha);
    j["beta"] = format_rational(ctx.cls->beta);
    j["kind"] = kind_name(ctx.cls->kind);
  } else {
    j["kind"] = kind_name(TransSasakianKind::not_trans_sasakian);
  }
  return j;
}

ojson soliton_solve_json_body(const AuditContext& ctx,
                              const std::optional<SolitonSolution>& sol,
                              const std::vector<std::string>& notes) {
  ojson j;
  j["command"] = "soliton_solve";
  if (sol) {
    j["status"] = "solved";
    j["lambda"] = format_rational(sol->lambda);
    j["mu"] = format_rational(sol->mu);
    j["class"] = class_name(classify(sol->lambda));
    if (ctx.cls)
      append_identity_report(
          j, check_scalar_identities(ctx.geom, *ctx.cls, sol->lambda, sol->mu));
  } else {
    j["status"] = "no_solution";
  }
  j["notes"] = notes;
  return j;
}

ojson theorems_json_body(const DerivedInstance& d,
                         const std::vector<TheoremReport>& reports) {
  ojson j;
  j["command"] = "theorems";
  ojson arr = ojson::array();
  for (const auto& rep : reports) arr.push_back(theorem_json(rep));
  j["reports"] = arr;
  j["notes"] = d.notes;
  return j;
}

}  // namespace

CommandResult cmd_validate(const InstanceBundle& in, Format fmt) {
  ojson j = validate_json_body(in);
  bool ok = j["frame_valid"].get<bool>() && j["metric_valid"].get<bool>() &&
            j["contact_valid"].get<bool>();
  if (fmt == Format::json) return {dump(j), ok ? 0 : 1};
  std::ostringstream os;
  os << "frame: " << (j["frame_valid"].get<bool>() ? "valid" : "INVALID") << "\n";
  os << "metric: " << (j["metric_valid"].get<bool>() ? "valid" : "INVALID") << "\n";
  os << "contact: " << (j["contact_valid"].get<bool>() ? "valid" : "INVALID")
     << "\n";
  for (const char* key :
       {"frame_violations", "metric_violations", "contact_violations"})
    for (const auto& v : j[key]) {
      os << "  violation [" << v["rule"].get<std::string>() << "] at (";
      bool first = true;
      for (const auto& i : v["indices"]) {
        os << (first ? "" : ",") << i.get<int>();
        first = false;
      }
      os << ") value " << v["value"].get<std::string>() << "\n";
    }
  return {os.str(), ok ? 0 : 1};
}

CommandResult cmd_geometry(const InstanceBundle& in, Format fmt) {
  try {
    DerivedInstance d = derive(in);
    if (fmt == Format::json) return {dump(geometry_json_body(d)), 0};
    return {geometry_text_body(d), 0};
  } catch (const InvalidFrame& e) {
    return invalid_frame_result(e, fmt);
  }
}

CommandResult cmd_detect(const InstanceBundle& in, Format fmt) {
  try {
    DerivedInstance d = derive(in);
    int exit = d.ctx.cls ? 0 : 1;
    if (fmt == Format::json) return {dump(detect_json_body(d.ctx)), exit};
    std::ostringstream os;
    if (d.ctx.cls)
      os << "alpha = " << format_rational(d.ctx.cls->alpha)
         << ", beta = " << format_rational(d.ctx.cls->beta)
         << ", kind = " << kind_name(d.ctx.cls->kind) << "\n";
    else
      os << "not_trans_sasakian\n";
    return {os.str(), exit};
  } catch (const InvalidFrame& e) {
    return invalid_frame_result(e, fmt);
  }
}

CommandResult cmd_soliton_solve(const InstanceBundle& in,
                                const std::optional<VectorField>& potential,
                                Format fmt) {
  try {
    DerivedInstance d = derive(in);
    VectorField V = d.ctx.acd.xi;
    if (potential)
      V = *potential;
    else if (in.manifest.soliton_potential)
      V = *in.manifest.soliton_potential;
    auto sol = solve_eta_einstein(d.ctx.geom, d.ctx.acd, V);
    int exit = sol ? 0 : 1;
    if (fmt == Format::json)
      return {dump(soliton_solve_json_body(d.ctx, sol, d.notes)), exit};
    std::ostringstream os;
    if (sol) {
      os << "lambda = " << format_rational(sol->lambda)
         << ", mu = " << format_rational(sol->mu)
         << ", class = " << class_name(classify(sol->lambda)) << "\n";
      if (d.ctx.cls) {
        IdentityReport ids = check_scalar_identities(d.ctx.geom, *d.ctx.cls,
                                                     sol->lambda, sol->mu);
        for (const auto& c : ids.checks)
          os << "  identity " << c.id << ": " << (c.holds ? "holds" : "FAILS")
             << "\n";
      }
    } else {
      os << "no_solution\n";
    }
    for (const auto& n : d.notes) os << "note: " << n << "\n";
    return {os.str(), exit};
  } catch (const InvalidFrame& e) {
    return invalid_frame_result(e, fmt);
  }
}

CommandResult cmd_soliton_check(const InstanceBundle& in, const Rational& lambda,
                                const Rational& mu,
                                const std::optional<VectorField>& potential,
                                Format fmt) {
  try {
    DerivedInstance d = derive(in);
    VectorField V = d.ctx.acd.xi;
    if (potential)
      V = *potential;
    else if (in.manifest.soliton_potential)
      V = *in.manifest.soliton_potential;
    Sym2Tensor res = eta_einstein_residual(d.ctx.geom, d.ctx.acd, lambda, mu, V);
    bool zero = is_zero(res.t);
    if (fmt == Format::json) {
      ojson j;
      j["command"] = "soliton_check";
      j["lambda"] = format_rational(lambda);
      j["mu"] = format_rational(mu);
      j["residual"] = mat_json(res.t);
      j["zero"] = zero;
      return {dump(j), zero ? 0 : 1};
    }
    std::ostringstream os;
    os << "residual " << (zero ? "zero" : "NONZERO") << "\n";
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        if (res.t[i][j] != 0)
          os << "  residual[" << i + 1 << "][" << j + 1
             << "] = " << format_rational(res.t[i][j]) << "\n";
    return {os.str(), zero ? 0 : 1};
  } catch (const InvalidFrame& e) {
    return invalid_frame_result(e, fmt);
  }
}

CommandResult cmd_theorems(const InstanceBundle& in,
                           const std::optional<TheoremId>& only, Format fmt) {
  try {
    DerivedInstance d = derive(in);
    std::vector<TheoremReport> reports;
    if (only)
      reports.push_back(audit(*only, d.ctx));
    else
      reports = run_all(d.ctx);
    int exit = any_finding(reports) ? 1 : 0;
    if (fmt == Format::json) return {dump(theorems_json_body(d, reports)), exit};
    std::ostringstream os;
    for (const auto& rep : reports) os << theorem_text(rep);
    for (const auto& n : d.notes) os << "note: " << n << "\n";
    return {os.str(), exit};
  } catch (const InvalidFrame& e) {
    return invalid_frame_result(e, fmt);
  }
}

CommandResult cmd_report(const InstanceBundle& in, Format fmt) {
  CommandResult validate = cmd_validate(in, fmt);
  if (validate.exit_code != 0) return validate;
  try {
    DerivedInstance d = derive(in);
    auto sol = solve_eta_einstein(d.ctx.geom, d.ctx.acd, d.ctx.acd.xi);
    std::vector<TheoremReport> reports = run_all(d.ctx);
    int exit = any_finding(reports) || !sol ? 1 : 0;
    if (fmt == Format::json) {
      ojson j;
      j["command"] = "report";
      j["validate"] = validate_json_body(in);
      j["geometry"] = geometry_json_body(d);
      j["detect"] = detect_json_body(d.ctx);
      j["soliton"] = soliton_solve_json_body(d.ctx, sol, {});
      j["theorems"] = theorems_json_body(d, reports);
      return {dump(j), exit};
    }
    std::ostringstream os;
    os << "== validate ==\n" << cmd_validate(in, Format::text).output;
    os << "== geometry ==\n" << geometry_text_body(d);
    os << "== detect ==\n" << cmd_detect(in, Format::text).output;
    os << "== soliton ==\n" << cmd_soliton_solve(in, std::nullopt, Format::text).output;
    os << "== theorems ==\n";
    for (const auto& rep : reports) os << theorem_text(rep);
    for (const auto& n : d.notes) os << "note: " << n << "\n";
    return {os.str(), exit};
  } catch (const InvalidFrame& e) {
    return invalid_frame_result(e, fmt);
  }
}

}  // namespace sasaki
