#include "sasaki/contact.hpp"

#include "sasaki/linalg.hpp"

namespace sasaki {

AlmostContactData AlmostContactData::make(const Mat3& phi, const VectorField& xi,
                                          const FrameMetric& g) {
  AlmostContactData acd;
  acd.phi = phi;
  acd.xi = xi;
  for (int i = 0; i < kDim; ++i) {
    Rational v;
    for (int j = 0; j < kDim; ++j) v += g.g[i][j] * xi.v[j];
    acd.eta[i] = v;
  }
  return acd;
}

const char* kind_name(TransSasakianKind k) {
  switch (k) {
    case TransSasakianKind::cosymplectic: return "cosymplectic";
    case TransSasakianKind::alpha_sasakian: return "alpha_sasakian";
    case TransSasakianKind::beta_kenmotsu: return "beta_kenmotsu";
    case TransSasakianKind::proper_trans_sasakian: return "proper_trans_sasakian";
    case TransSasakianKind::not_trans_sasakian: return "not_trans_sasakian";
  }
  return "?";
}

namespace {

int rank_of(Mat3 m) {
  int rank = 0;
  for (int col = 0; col < kDim && rank < kDim; ++col) {
    int piv = rank;
    while (piv < kDim && m[piv][col] == 0) ++piv;
    if (piv == kDim) continue;
    std::swap(m[piv], m[rank]);
    for (int i = rank + 1; i < kDim; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[rank][col];
      for (int j = col; j < kDim; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ValidationReport validate_almost_contact(const AlmostContactData& acd,
                                         const FrameMetric& fm) {
  ValidationReport report;
  const Mat3& phi = acd.phi;
  const Mat3& g = fm.g;
  const Vec3& xi = acd.xi.v;
  const Vec3& eta = acd.eta;

  Mat3 phi2 = matmul(phi, phi);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      Rational want = -(i == j ? Rational(1) : Rational(0)) + xi[i] * eta[j];
      if (phi2[i][j] != want)
        report.violations.push_back(
            {"phi_squared", {i + 1, j + 1, 0, 0}, phi2[i][j] - want});
    }

  Rational eta_xi;
  for (int i = 0; i < kDim; ++i) eta_xi += eta[i] * xi[i];
  if (eta_xi != 1)
    report.violations.push_back({"eta_of_xi", {0, 0, 0, 0}, eta_xi - 1});

  // g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y)
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      Rational lhs;
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) lhs += phi[a][i] * g[a][b] * phi[b][j];
      Rational want = g[i][j] - eta[i] * eta[j];
      if (lhs != want)
        report.violations.push_back(
            {"phi_compatibility", {i + 1, j + 1, 0, 0}, lhs - want});
    }

  // g(X, phi Y) + g(Y, phi X) = 0
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      Rational v;
      for (int a = 0; a < kDim; ++a)
        v += g[i][a] * phi[a][j] + g[j][a] * phi[a][i];
      if (v != 0)
        report.violations.push_back({"phi_antisymmetry", {i + 1, j + 1, 0, 0}, v});
    }

  Vec3 phixi = mat_vec(phi, xi);
  for (int i = 0; i < kDim; ++i)
    if (phixi[i] != 0)
      report.violations.push_back({"phi_of_xi", {i + 1, 0, 0, 0}, phixi[i]});

  for (int j = 0; j < kDim; ++j) {
    Rational v;
    for (int a = 0; a < kDim; ++a) v += eta[a] * phi[a][j];
    if (v != 0)
      report.violations.push_back({"eta_of_phi", {j + 1, 0, 0, 0}, v});
  }

  if (int r = rank_of(phi); r != kDim - 1)
    report.violations.push_back({"phi_rank", {r, 0, 0, 0}, Rational(r) - (kDim - 1)});

  return report;
}

std::optional<TransSasakianClass> detect_alpha_beta(const FrameGeometry& geom,
                                                    const AlmostContactData& acd) {
  const Vec3& xi = acd.xi.v;
  const Vec3& eta = acd.eta;
  const Mat3& phi = acd.phi;

  LinearSystem sys;
  for (int i = 0; i < kDim; ++i) {
    Vec3 lhs = geom.cov_deriv_vector(i, xi);
    for (int k = 0; k < kDim; ++k) {
      Rational ca = -phi[k][i];
      Rational cb = (i == k ? Rational(1) : Rational(0)) - eta[i] * xi[k];
      sys.rows.push_back({ca, cb});
      sys.rhs.push_back(lhs[k]);
    }
  }
  SolveResult res = solve_exact(sys);
  if (res.status != SolveStatus::unique) return std::nullopt;
  const Rational alpha = res.solution[0];
  const Rational beta = res.solution[1];

  // Full covariant-derivative identity for phi, all frame pairs.
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      Vec3 ej{};
      ej[j] = 1;
      Vec3 phi_ej = mat_vec(phi, ej);
      // (nabla_{e_i} phi)(e_j) = nabla_i(phi e_j) - phi(nabla_i e_j)
      Vec3 lhs = sub(geom.cov_deriv_vector(i, phi_ej),
                     mat_vec(phi, geom.conn.gamma[i][j]));
      Vec3 ei{};
      ei[i] = 1;
      Vec3 phi_ei = mat_vec(phi, ei);
      Rational g_ij = geom.g(i, j);
      Rational g_phij = geom.inner(phi_ei, ej);
      Vec3 rhs = add(scale(alpha, sub(scale(g_ij, xi), scale(eta[j], ei))),
                     scale(beta, sub(scale(g_phij, xi), scale(eta[j], phi_ei))));
      if (lhs != rhs) return std::nullopt;
    }
  }

  TransSasakianClass cls;
  cls.alpha = alpha;
  cls.beta = beta;
  if (alpha == 0 && beta == 0)
    cls.kind = TransSasakianKind::cosymplectic;
  else if (beta == 0)
    cls.kind = TransSasakianKind::alpha_sasakian;
  else if (alpha == 0)
    cls.kind = TransSasakianKind::beta_kenmotsu;
  else
    cls.kind = TransSasakianKind::proper_trans_sasakian;
  return cls;
}

IdentityReport verify_canonical_identities(const FrameGeometry& geom,
                                           const AlmostContactData& acd,
                                           const TransSasakianClass& cls) {
  const Rational d = cls.alpha * cls.alpha - cls.beta * cls.beta;
  const Vec3& xi = acd.xi.v;
  const Vec3& eta = acd.eta;
  const Rank4& R = geom.R.r;
  const Mat3& S = geom.ric.S;
  const Rational& r = geom.ric.r;
  IdentityReport rep;

  bool ok = true;  // R(X,Y)xi = d [eta(Y)X - eta(X)Y]
  for (int i = 0; i < kDim && ok; ++i)
    for (int j = 0; j < kDim && ok; ++j)
      for (int l = 0; l < kDim && ok; ++l) {
        Rational lhs;
        for (int k = 0; k < kDim; ++k) lhs += xi[k] * R[i][j][k][l];
        Rational rhs = d * (eta[j] * (i == l ? 1 : 0) - eta[i] * (j == l ? 1 : 0));
        ok = lhs == rhs;
      }
  rep.checks.push_back({"R(X,Y)xi", ok});

  ok = true;  // R(xi,X)Y = d [g(X,Y)xi - eta(Y)X]
  for (int i = 0; i < kDim && ok; ++i)
    for (int j = 0; j < kDim && ok; ++j)
      for (int l = 0; l < kDim && ok; ++l) {
        Rational lhs;
        for (int a = 0; a < kDim; ++a) lhs += xi[a] * R[a][i][j][l];
        Rational rhs = d * (geom.g(i, j) * xi[l] - eta[j] * (i == l ? 1 : 0));
        ok = lhs == rhs;
      }
  rep.checks.push_back({"R(xi,X)Y", ok});

  ok = true;  // R(xi,X)xi = d [eta(X)xi - X]
  for (int i = 0; i < kDim && ok; ++i)
    for (int l = 0; l < kDim && ok; ++l) {
      Rational lhs;
      for (int a = 0; a < kDim; ++a)
        for (int k = 0; k < kDim; ++k) lhs += xi[a] * xi[k] * R[a][i][k][l];
      Rational rhs = d * (eta[i] * xi[l] - (i == l ? 1 : 0));
      ok = lhs == rhs;
    }
  rep.checks.push_back({"R(xi,X)xi", ok});

  ok = true;  // S = (r/2 - d) g - (r/2 - 3d) eta (x) eta
  for (int i = 0; i < kDim && ok; ++i)
    for (int j = 0; j < kDim && ok; ++j) {
      Rational rhs = (r / 2 - d) * geom.g(i, j) - (r / 2 - 3 * d) * eta[i] * eta[j];
      ok = S[i][j] == rhs;
    }
  rep.checks.push_back({"S_form", ok});

  ok = true;  // S(X,xi) = 2 d eta(X)
  for (int i = 0; i < kDim && ok; ++i) {
    Rational lhs;
    for (int j = 0; j < kDim; ++j) lhs += S[i][j] * xi[j];
    ok = lhs == 2 * d * eta[i];
  }
  rep.checks.push_back({"S(X,xi)", ok});

  return rep;
}

std::optional<EtaEinsteinFit> fit_eta_einstein(const Sym2Tensor& S,
                                               const FrameMetric& g,
                                               const Vec3& eta) {
  LinearSystem sys;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      sys.rows.push_back({g.g[i][j], eta[i] * eta[j]});
      sys.rhs.push_back(S.t[i][j]);
    }
  SolveResult res = solve_exact(sys);
  if (res.status != SolveStatus::unique) return std::nullopt;
  return EtaEinsteinFit{res.solution[0], res.solution[1]};
}

}  // namespace sasaki
