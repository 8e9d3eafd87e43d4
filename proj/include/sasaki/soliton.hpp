#pragma once

#include <optional>

#include "sasaki/contact.hpp"

namespace sasaki {

enum class SolitonClass { shrinking, steady, expanding };

const char* class_name(SolitonClass c);

struct SolitonSolution {
  Rational lambda;
  Rational mu;
};

// L_V g + 2S + (2 lambda - r) g + 2 mu eta (x) eta, componentwise.
Sym2Tensor eta_einstein_residual(const FrameGeometry& geom,
                                 const AlmostContactData& acd,
                                 const Rational& lambda, const Rational& mu,
                                 const VectorField& V);

// Same with (2 lambda) g in place of (2 lambda - r) g.
Sym2Tensor eta_ricci_residual(const FrameGeometry& geom,
                              const AlmostContactData& acd,
                              const Rational& lambda, const Rational& mu,
                              const VectorField& V);

// Exact solve of the soliton equation in (lambda, mu) along V. Empty
// optional: the instance admits no such soliton. Underdetermined cannot
// happen for positive-definite g and is asserted against.
std::optional<SolitonSolution> solve_eta_einstein(const FrameGeometry& geom,
                                                  const AlmostContactData& acd,
                                                  const VectorField& V);

SolitonClass classify(const Rational& lambda);

// Post-hoc scalar identities for a solved soliton:
//   r = 4(alpha^2-beta^2) + 2 lambda + 2 mu
//   r = 6 lambda + 4 beta + 2 mu
//   lambda = (alpha^2-beta^2) - beta
// plus agreement of the alpha^2 vs beta(beta+1) sign rule with
// classify(lambda).
IdentityReport check_scalar_identities(const FrameGeometry& geom,
                                       const TransSasakianClass& cls,
                                       const Rational& lambda, const Rational& mu);

struct CollinearResult {
  Rational b;
  SolitonSolution sol;
  EtaEinsteinFit fitted;       // exact eta-Einstein fit of S
  bool s_form_holds = false;   // S = (r/2 - lambda - b beta) g + (b beta - mu) eta (x) eta
  bool r_identity_holds = false;  // r = 2 lambda + 2 mu + 4(alpha^2 - beta^2)
};

// Soliton solve with potential V = b xi, b a rational constant, plus the
// collinear-potential shape checks on the solved values.
std::optional<CollinearResult> collinear_solve(const FrameGeometry& geom,
                                               const AlmostContactData& acd,
                                               const TransSasakianClass& cls,
                                               const Rational& b);

}  // namespace sasaki
