#include "sasaki/frame.hpp"

#include "sasaki/linalg.hpp"

namespace sasaki {

ValidationReport validate_frame(const StructureConstants& sc) {
  ValidationReport report;
  const Rank3& c = sc.c;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        Rational v = c[i][j][k] + c[j][i][k];
        if (v != 0 && i <= j)
          report.violations.push_back(
              {"antisymmetry", {i + 1, j + 1, k + 1, 0}, v});
      }
  // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      for (int k = j + 1; k < kDim; ++k)
        for (int m = 0; m < kDim; ++m) {
          Rational v;
          for (int p = 0; p < kDim; ++p)
            v += c[i][j][p] * c[p][k][m] + c[j][k][p] * c[p][i][m] +
                 c[k][i][p] * c[p][j][m];
          if (v != 0)
            report.violations.push_back(
                {"jacobi", {i + 1, j + 1, k + 1, m + 1}, v});
        }
  return report;
}

ValidationReport validate_metric(const FrameMetric& fm) {
  ValidationReport report;
  const Mat3& g = fm.g;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      if (g[i][j] != g[j][i])
        report.violations.push_back(
            {"metric_symmetry", {i + 1, j + 1, 0, 0}, g[i][j] - g[j][i]});
  // Leading principal minors.
  Rational m1 = g[0][0];
  Rational m2 = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  Rational m3 = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  if (m1 <= 0) report.violations.push_back({"positive_definite", {1, 0, 0, 0}, m1});
  if (m2 <= 0) report.violations.push_back({"positive_definite", {2, 0, 0, 0}, m2});
  if (m3 <= 0) report.violations.push_back({"positive_definite", {3, 0, 0, 0}, m3});
  return report;
}

Mat3 inverse(const Mat3& m) {
  Mat3 inv{};
  for (int col = 0; col < kDim; ++col) {
    LinearSystem sys;
    for (int i = 0; i < kDim; ++i) {
      sys.rows.push_back({m[i][0], m[i][1], m[i][2]});
      sys.rhs.push_back(i == col ? Rational(1) : Rational(0));
    }
    SolveResult res = solve_exact(sys);
    if (res.status != SolveStatus::unique)
      throw std::invalid_argument("singular matrix");
    for (int i = 0; i < kDim; ++i) inv[i][col] = res.solution[i];
  }
  return inv;
}

Connection koszul_connection(const StructureConstants& sc, const FrameMetric& fm) {
  if (auto rep = validate_frame(sc); !rep.valid())
    throw InvalidFrame("structure constants violate antisymmetry or Jacobi");
  if (auto rep = validate_metric(fm); !rep.valid())
    throw InvalidFrame("frame metric is not symmetric positive-definite");

  const Rank3& c = sc.c;
  const Mat3& g = fm.g;
  const Mat3 ginv = inverse(g);

  // g(e_a, [e_b, e_c]) = sum_m c[b][c][m] g[a][m]
  auto gbr = [&](int a, int b, int cc) {
    Rational v;
    for (int m = 0; m < kDim; ++m) v += c[b][cc][m] * g[a][m];
    return v;
  };

  Connection conn;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      Vec3 w{};  // w_k = g(nabla_{e_i} e_j, e_k)
      for (int k = 0; k < kDim; ++k)
        w[k] = (-gbr(i, j, k) + gbr(j, k, i) + gbr(k, i, j)) / 2;
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l)
          conn.gamma[i][j][k] += ginv[k][l] * w[l];
    }
  return conn;
}

CurvatureTensor curvature_tensor(const Connection& conn, const StructureConstants& sc) {
  const Rank3& G = conn.gamma;
  const Rank3& c = sc.c;
  CurvatureTensor R;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          Rational v;
          for (int m = 0; m < kDim; ++m)
            v += G[j][k][m] * G[i][m][l] - G[i][k][m] * G[j][m][l] -
                 c[i][j][m] * G[m][k][l];
          R.r[i][j][k][l] = v;
        }
  return R;
}

RicciData ricci(const CurvatureTensor& R, const FrameMetric& fm) {
  const Mat3& g = fm.g;
  const Mat3 ginv = inverse(g);

  // (0,4) form: R4[i][j][k][l] = g(R(e_i,e_j)e_k, e_l).
  Rank4 R4{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l)
          for (int m = 0; m < kDim; ++m)
            R4[i][j][k][l] += R.r[i][j][k][m] * g[m][l];

  RicciData out;
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) {
      Rational s;
      for (int i = 0; i < kDim; ++i)
        for (int l = 0; l < kDim; ++l) s += ginv[i][l] * R4[i][j][k][l];
      out.S[j][k] = s;
    }
  out.Q = matmul(ginv, out.S);
  out.r = 0;
  for (int i = 0; i < kDim; ++i) out.r += out.Q[i][i];
  return out;
}

Rank3 cov_deriv_sym2(const Sym2Tensor& T, const Connection& conn) {
  const Rank3& G = conn.gamma;
  Rank3 dT{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        Rational v;
        for (int p = 0; p < kDim; ++p)
          v -= G[i][j][p] * T.t[p][k] + G[i][k][p] * T.t[j][p];
        dT[i][j][k] = v;
      }
  return dT;
}

Sym2Tensor lie_derivative_metric(const VectorField& V, const Connection& conn,
                                 const FrameMetric& fm) {
  const Mat3& g = fm.g;
  auto nabla = [&](int i) {
    Vec3 r{};
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) r[k] += V.v[j] * conn.gamma[i][j][k];
    return r;
  };
  Sym2Tensor L;
  for (int i = 0; i < kDim; ++i) {
    Vec3 ni = nabla(i);
    for (int j = 0; j < kDim; ++j) {
      Vec3 nj = nabla(j);
      Rational v;
      for (int k = 0; k < kDim; ++k) v += ni[k] * g[k][j] + nj[k] * g[k][i];
      L.t[i][j] = v;
    }
  }
  return L;
}

FrameGeometry FrameGeometry::derive(const StructureConstants& c, const FrameMetric& g) {
  FrameGeometry geom;
  geom.c = c;
  geom.metric = g;
  geom.conn = koszul_connection(c, g);
  geom.g_inv = inverse(g.g);
  geom.R = curvature_tensor(geom.conn, c);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l)
          for (int m = 0; m < kDim; ++m)
            geom.R4[i][j][k][l] += geom.R.r[i][j][k][m] * g.g[m][l];
  geom.ric = ricci(geom.R, g);
  return geom;
}

Vec3 FrameGeometry::cov_deriv_vector(int i, const Vec3& V) const {
  Vec3 r{};
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) r[k] += V[j] * conn.gamma[i][j][k];
  return r;
}

Rational FrameGeometry::inner(const Vec3& u, const Vec3& w) const {
  Rational v;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) v += u[i] * metric.g[i][j] * w[j];
  return v;
}

}  // namespace sasaki
