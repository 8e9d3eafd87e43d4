#include <doctest.h>

#include "sasaki/harness.hpp"

using namespace sasaki;

namespace {

AuditContext ctx_for(const Fixture& fx) {
  return AuditContext::build(fx.c, fx.g, fx.phi, fx.xi);
}

}  // namespace

TEST_CASE("theorem names round-trip") {
  for (TheoremId id : kAllTheorems) {
    auto back = theorem_from_name(theorem_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(theorem_from_name("T1.1").has_value());
  CHECK_FALSE(theorem_from_name("").has_value());
}

TEST_CASE("audit context on the hyperbolic frame") {
  auto ctx = ctx_for(fixture_hyp());
  REQUIRE(ctx.cls.has_value());
  CHECK(ctx.cls->alpha == 0);
  CHECK(ctx.cls->beta == -2);
  REQUIRE(ctx.soliton.has_value());
  CHECK(ctx.soliton->lambda == -2);
  CHECK(ctx.soliton->mu == -2);
}

TEST_CASE("scalar-identity audits pass on the hyperbolic frame") {
  auto ctx = ctx_for(fixture_hyp());

  auto t31 = audit(TheoremId::T3_1, ctx);
  REQUIRE(t31.hypothesis_holds);
  CHECK(t31.conclusion_holds == true);
  CHECK(t31.witness.at("predicted_r") == -24);
  CHECK(t31.witness.at("r") == -24);

  auto t32 = audit(TheoremId::T3_2, ctx);
  REQUIRE(t32.hypothesis_holds);
  CHECK(t32.conclusion_holds == true);
  CHECK(t32.witness.at("lambda_b") == 0);
  CHECK(t32.witness.at("mu_b") == -4);

  auto t51 = audit(TheoremId::T5_1, ctx);
  REQUIRE(t51.hypothesis_holds);
  CHECK(t51.conclusion_holds == true);
}

TEST_CASE("mu = beta makes the Codazzi-family results inapplicable") {
  auto ctx = ctx_for(fixture_hyp());  // mu = beta = -2 here
  for (TheoremId id : {TheoremId::T4_1, TheoremId::C4_2, TheoremId::T4_5,
                       TheoremId::C4_6, TheoremId::C5_4, TheoremId::C7_2}) {
    auto rep = audit(id, ctx);
    CHECK_FALSE(rep.hypothesis_holds);
    CHECK_FALSE(rep.conclusion_holds.has_value());
  }
}

TEST_CASE("alpha-Sasakian audits on su(2)") {
  auto ctx = ctx_for(fixture_su2(rat(1)));

  auto t43 = audit(TheoremId::T4_3, ctx);
  REQUIRE(t43.hypothesis_holds);
  CHECK(t43.conclusion_holds == true);
  CHECK(t43.witness.at("predicted_r") == 6);

  // mu = beta = 0, so the mu != beta gate closes C4.6 despite the
  // cyclic-parallel Ricci tensor.
  auto c46 = audit(TheoremId::C4_6, ctx);
  CHECK_FALSE(c46.hypothesis_holds);
  CHECK_FALSE(c46.conclusion_holds.has_value());

  auto t31 = audit(TheoremId::T3_1, ctx);
  REQUIRE(t31.hypothesis_holds);
  CHECK(t31.conclusion_holds == true);

  auto t91 = audit(TheoremId::T9_1, ctx);
  CHECK_FALSE(t91.hypothesis_holds);
}

TEST_CASE("findings: stated scalar relations that fail exactly") {
  auto ctx = ctx_for(fixture_hyp());

  auto t81 = audit(TheoremId::T8_1, ctx);
  REQUIRE(t81.hypothesis_holds);
  CHECK(t81.conclusion_holds == false);
  CHECK(t81.witness.at("predicted_r") == -28);
  CHECK(t81.witness.at("r") == -24);
  REQUIRE_FALSE(t81.notes.empty());

  auto t63 = audit(TheoremId::T6_3, ctx);
  REQUIRE(t63.hypothesis_holds);
  CHECK(t63.conclusion_holds == false);

  auto t91 = audit(TheoremId::T9_1, ctx);
  REQUIRE(t91.hypothesis_holds);
  CHECK(t91.conclusion_holds == false);
  CHECK(t91.witness.at("f") == -2);
  CHECK(t91.witness.at("stated_lambda") == 2);
}

TEST_CASE("degenerate instances carry an explanatory note") {
  auto ctx = ctx_for(fixture_abl());
  auto rep = audit(TheoremId::T5_1, ctx);
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(rep.notes.front().find("degenerate") != std::string::npos);
}

TEST_CASE("run_all returns all seventeen reports deterministically") {
  auto ctx = ctx_for(fixture_hyp());
  auto reports = run_all(ctx);
  REQUIRE(reports.size() == 17);
  for (size_t i = 0; i < reports.size(); ++i)
    CHECK(reports[i].id == kAllTheorems[i]);

  auto again = run_all(ctx_for(fixture_hyp()));
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].hypothesis_holds == again[i].hypothesis_holds);
    CHECK(reports[i].conclusion_holds == again[i].conclusion_holds);
    CHECK(reports[i].witness == again[i].witness);
    CHECK(reports[i].notes == again[i].notes);
  }
}

TEST_CASE("every applicable conclusion is decided on each fixture") {
  for (const Fixture& fx :
       {fixture_hyp(), fixture_su2(rat(1)), fixture_ken(rat(3)), fixture_abl()}) {
    auto reports = run_all(ctx_for(fx));
    for (const auto& rep : reports)
      CHECK(rep.hypothesis_holds == rep.conclusion_holds.has_value());
  }
}

TEST_CASE("Kenmotsu family audits across parameters") {
  for (const Rational& c : {rat(1), rat(-3), rat(2, 5)}) {
    auto ctx = ctx_for(fixture_ken(c));
    REQUIRE(ctx.soliton.has_value());
    CHECK(ctx.soliton->lambda == -c * (c + 1));
    CHECK(ctx.soliton->mu == c);
    auto t31 = audit(TheoremId::T3_1, ctx);
    REQUIRE(t31.hypothesis_holds);
    CHECK(t31.conclusion_holds == true);
  }
}

TEST_CASE("fixture_by_name parses the built-in library") {
  REQUIRE(fixture_by_name("hyp").has_value());
  REQUIRE(fixture_by_name("paper_example").has_value());
  CHECK(fixture_by_name("paper_example")->c.c == fixture_hyp().c.c);
  REQUIRE(fixture_by_name("abl").has_value());

  auto su2 = fixture_by_name("su2(3/2)");
  REQUIRE(su2.has_value());
  CHECK(su2->c.c[0][1][2] == 3);

  auto ken = fixture_by_name("ken(-2)");
  REQUIRE(ken.has_value());
  CHECK(ken->c.c == fixture_hyp().c.c);

  CHECK_FALSE(fixture_by_name("nope").has_value());
  CHECK_FALSE(fixture_by_name("ken(x)").has_value());
  CHECK_FALSE(fixture_by_name("ken()").has_value());
}

TEST_CASE("published-value discrepancies on the printed example") {
  auto fx = fixture_hyp();
  auto ctx = ctx_for(fx);
  auto notes = published_discrepancies(fx, ctx);
  REQUIRE_FALSE(notes.empty());
  // S(e1,e1), S(e2,e2), r, mu, and two curvature components disagree;
  // S(e3,e3) and lambda agree.
  CHECK(notes.size() == 6);
  bool saw_r = false, saw_mu = false;
  for (const auto& n : notes) {
    if (n.find("r = -8") != std::string::npos) saw_r = true;
    if (n.find("mu = 6") != std::string::npos) saw_mu = true;
  }
  CHECK(saw_r);
  CHECK(saw_mu);

  auto clean = fixture_su2(rat(1));
  CHECK(published_discrepancies(clean, ctx_for(clean)).empty());
}
