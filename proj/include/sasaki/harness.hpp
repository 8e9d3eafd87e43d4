#pragma once

#include <map>
#include <optional>

#include "sasaki/curvature_zoo.hpp"
#include "sasaki/soliton.hpp"

namespace sasaki {

// The numbered classification results under audit, in catalog order.
enum class TheoremId {
  T3_1, T3_2,
  T4_1, C4_2, T4_3, T4_5, C4_6, T4_7,
  T5_1, T5_3, C5_4,
  L6_2, T6_3,
  T7_1, C7_2,
  T8_1,
  T9_1,
};

inline constexpr std::array<TheoremId, 17> kAllTheorems = {
    TheoremId::T3_1, TheoremId::T3_2, TheoremId::T4_1, TheoremId::C4_2,
    TheoremId::T4_3, TheoremId::T4_5, TheoremId::C4_6, TheoremId::T4_7,
    TheoremId::T5_1, TheoremId::T5_3, TheoremId::C5_4, TheoremId::L6_2,
    TheoremId::T6_3, TheoremId::T7_1, TheoremId::C7_2, TheoremId::T8_1,
    TheoremId::T9_1,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

struct TheoremReport {
  TheoremId id{};
  bool hypothesis_holds = false;
  // Unset exactly when the hypothesis fails (inapplicable).
  std::optional<bool> conclusion_holds;
  // Named witness scalars (r, lambda, mu, alpha, beta, predicted values).
  std::map<std::string, Rational> witness;
  std::vector<std::string> notes;
};

// Immutable evaluation context shared by all audits of one instance.
struct AuditContext {
  FrameGeometry geom;
  AlmostContactData acd;
  std::optional<TransSasakianClass> cls;
  std::optional<SolitonSolution> soliton;  // solved along xi

  static AuditContext build(const StructureConstants& c, const FrameMetric& g,
                            const Mat3& phi, const VectorField& xi);
};

TheoremReport audit(TheoremId id, const AuditContext& ctx);

// All 17 reports in id order, deterministically.
std::vector<TheoremReport> run_all(const AuditContext& ctx);

// Built-in instances. Named scalar values published with the original
// example are carried alongside so reports can surface where exact
// computation disagrees with the printed table.
struct Fixture {
  std::string name;
  StructureConstants c;
  FrameMetric g;
  Mat3 phi{};
  VectorField xi;
  std::map<std::string, Rational> published_values;
};

Fixture fixture_hyp();                       // the published example, KEN(-2)
Fixture fixture_su2(const Rational& alpha);  // su(2) frame, alpha-Sasakian
Fixture fixture_ken(const Rational& c);      // beta-Kenmotsu family
Fixture fixture_abl();                       // abelian (flat) frame

// Parses "hyp", "paper_example", "abl", "su2(a)", "ken(c)" with rational
// parameters.
std::optional<Fixture> fixture_by_name(const std::string& name);

// Notes comparing exact computation against the fixture's published
// values; empty when nothing is recorded or nothing disagrees.
std::vector<std::string> published_discrepancies(const Fixture& fx,
                                                 const AuditContext& ctx);

}  // namespace sasaki
