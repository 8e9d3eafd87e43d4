#pragma once

#include <optional>

#include "sasaki/frame.hpp"

namespace sasaki {

// The almost contact triple (phi, xi, eta). phi[i][j] is the coefficient
// of e_i in phi(e_j); eta is always derived as g(., xi).
struct AlmostContactData {
  Mat3 phi{};
  VectorField xi;
  Vec3 eta{};

  static AlmostContactData make(const Mat3& phi, const VectorField& xi,
                                const FrameMetric& g);
};

enum class TransSasakianKind {
  cosymplectic,
  alpha_sasakian,
  beta_kenmotsu,
  proper_trans_sasakian,
  not_trans_sasakian,
};

const char* kind_name(TransSasakianKind k);

struct TransSasakianClass {
  Rational alpha;
  Rational beta;
  TransSasakianKind kind = TransSasakianKind::not_trans_sasakian;
};

struct IdentityCheck {
  std::string id;
  bool holds = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

// Axioms of an almost contact metric structure, componentwise:
// phi^2 = -I + eta (x) xi, eta(xi) = 1, g(phi X, phi Y) = g(X,Y) -
// eta(X)eta(Y), g(X, phi Y) + g(Y, phi X) = 0, phi xi = 0, eta o phi = 0,
// rank(phi) = 2.
ValidationReport validate_almost_contact(const AlmostContactData& acd,
                                         const FrameMetric& g);

// Solves nabla_{e_i} xi = -alpha phi(e_i) + beta (e_i - eta(e_i) xi) for
// constants (alpha, beta), then verifies the full covariant-derivative
// identity (nabla_X phi)(Y) = alpha[g(X,Y)xi - eta(Y)X] +
// beta[g(phi X,Y)xi - eta(Y)phi X] on all frame pairs. Empty optional
// means not trans-Sasakian.
std::optional<TransSasakianClass> detect_alpha_beta(const FrameGeometry& geom,
                                                    const AlmostContactData& acd);

// The five constant-(alpha,beta) curvature identities:
//   R(X,Y)xi, R(xi,X)Y, R(xi,X)xi, the eta-Einstein form of S, S(X,xi).
IdentityReport verify_canonical_identities(const FrameGeometry& geom,
                                           const AlmostContactData& acd,
                                           const TransSasakianClass& cls);

struct EtaEinsteinFit {
  Rational a;
  Rational b;
  bool einstein() const { return b == 0; }
};

// Exact fit S = a g + b eta (x) eta; empty optional when no exact fit
// exists.
std::optional<EtaEinsteinFit> fit_eta_einstein(const Sym2Tensor& S,
                                               const FrameMetric& g,
                                               const Vec3& eta);

}  // namespace sasaki
