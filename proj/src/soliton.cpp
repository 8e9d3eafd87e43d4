#include "sasaki/soliton.hpp"

#include <stdexcept>

#include "sasaki/linalg.hpp"

namespace sasaki {

const char* class_name(SolitonClass c) {
  switch (c) {
    case SolitonClass::shrinking: return "shrinking";
    case SolitonClass::steady: return "steady";
    case SolitonClass::expanding: return "expanding";
  }
  return "?";
}

Sym2Tensor eta_einstein_residual(const FrameGeometry& geom,
                                 const AlmostContactData& acd,
                                 const Rational& lambda, const Rational& mu,
                                 const VectorField& V) {
  Sym2Tensor L = lie_derivative_metric(V, geom.conn, geom.metric);
  Sym2Tensor res;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      res.t[i][j] = L.t[i][j] + 2 * geom.ric.S[i][j] +
                    (2 * lambda - geom.ric.r) * geom.g(i, j) +
                    2 * mu * acd.eta[i] * acd.eta[j];
  return res;
}

Sym2Tensor eta_ricci_residual(const FrameGeometry& geom,
                              const AlmostContactData& acd,
                              const Rational& lambda, const Rational& mu,
                              const VectorField& V) {
  Sym2Tensor L = lie_derivative_metric(V, geom.conn, geom.metric);
  Sym2Tensor res;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      res.t[i][j] = L.t[i][j] + 2 * geom.ric.S[i][j] +
                    2 * lambda * geom.g(i, j) + 2 * mu * acd.eta[i] * acd.eta[j];
  return res;
}

std::optional<SolitonSolution> solve_eta_einstein(const FrameGeometry& geom,
                                                  const AlmostContactData& acd,
                                                  const VectorField& V) {
  Sym2Tensor L = lie_derivative_metric(V, geom.conn, geom.metric);
  LinearSystem sys;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      sys.rows.push_back({2 * geom.g(i, j), 2 * acd.eta[i] * acd.eta[j]});
      sys.rhs.push_back(geom.ric.r * geom.g(i, j) - L.t[i][j] -
                        2 * geom.ric.S[i][j]);
    }
  SolveResult res = solve_exact(sys);
  if (res.status == SolveStatus::inconsistent) return std::nullopt;
  if (res.status == SolveStatus::underdetermined)
    throw std::logic_error("soliton system underdetermined with positive-definite g");
  SolitonSolution sol{res.solution[0], res.solution[1]};
  Sym2Tensor check = eta_einstein_residual(geom, acd, sol.lambda, sol.mu, V);
  if (!is_zero(check.t))
    throw std::logic_error("unique soliton solution with nonzero residual");
  return sol;
}

SolitonClass classify(const Rational& lambda) {
  if (lambda < 0) return SolitonClass::shrinking;
  if (lambda == 0) return SolitonClass::steady;
  return SolitonClass::expanding;
}

IdentityReport check_scalar_identities(const FrameGeometry& geom,
                                       const TransSasakianClass& cls,
                                       const Rational& lambda, const Rational& mu) {
  const Rational d = cls.alpha * cls.alpha - cls.beta * cls.beta;
  const Rational& r = geom.ric.r;
  IdentityReport rep;
  rep.checks.push_back({"r=4(a^2-b^2)+2l+2m", r == 4 * d + 2 * lambda + 2 * mu});
  rep.checks.push_back({"r=6l+4b+2m", r == 6 * lambda + 4 * cls.beta + 2 * mu});
  rep.checks.push_back({"l=(a^2-b^2)-b", lambda == d - cls.beta});

  const Rational a2 = cls.alpha * cls.alpha;
  const Rational bb1 = cls.beta * (cls.beta + 1);
  SolitonClass predicted = a2 < bb1   ? SolitonClass::shrinking
                           : a2 == bb1 ? SolitonClass::steady
                                       : SolitonClass::expanding;
  rep.checks.push_back({"sign_rule", predicted == classify(lambda)});
  return rep;
}

std::optional<CollinearResult> collinear_solve(const FrameGeometry& geom,
                                               const AlmostContactData& acd,
                                               const TransSasakianClass& cls,
                                               const Rational& b) {
  VectorField V{scale(b, acd.xi.v)};
  auto sol = solve_eta_einstein(geom, acd, V);
  if (!sol) return std::nullopt;

  CollinearResult out;
  out.b = b;
  out.sol = *sol;

  auto fit = fit_eta_einstein(Sym2Tensor{geom.ric.S}, geom.metric, acd.eta);
  if (!fit) return std::nullopt;
  out.fitted = *fit;

  const Rational d = cls.alpha * cls.alpha - cls.beta * cls.beta;
  const Rational& r = geom.ric.r;
  const Rational a_want = r / 2 - sol->lambda - b * cls.beta;
  const Rational b_want = b * cls.beta - sol->mu;
  out.s_form_holds = true;
  for (int i = 0; i < kDim && out.s_form_holds; ++i)
    for (int j = 0; j < kDim && out.s_form_holds; ++j)
      out.s_form_holds = geom.ric.S[i][j] ==
                         a_want * geom.g(i, j) + b_want * acd.eta[i] * acd.eta[j];
  out.r_identity_holds = r == 2 * sol->lambda + 2 * sol->mu + 4 * d;
  return out;
}

}  // namespace sasaki
