#include "sasaki/curvature_zoo.hpp"

#include "sasaki/linalg.hpp"

namespace sasaki {

namespace {

Rational kron(int i, int j) { return i == j ? 1 : 0; }

}  // namespace

Rank4 w2_tensor(const FrameGeometry& geom) {
  const Mat3& Q = geom.ric.Q;
  Rank4 W{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l)
          W[i][j][k][l] = geom.R.r[i][j][k][l] +
                          (geom.g(i, k) * Q[l][j] - geom.g(j, k) * Q[l][i]) / 2;
  return W;
}

Sym2Tensor einstein_tensor(const FrameGeometry& geom) {
  Sym2Tensor E;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      E.t[i][j] = geom.ric.S[i][j] - geom.ric.r / 3 * geom.g(i, j);
  return E;
}

Rank4 c_bochner_tensor(const FrameGeometry& geom, const AlmostContactData& acd) {
  const Mat3& S = geom.ric.S;
  const Mat3& Q = geom.ric.Q;
  const Mat3& phi = acd.phi;
  const Vec3& eta = acd.eta;
  const Vec3& xi = acd.xi.v;
  const Rational D = (geom.ric.r + 2) / 4;
  const Mat3 Qphi = matmul(Q, phi);

  // g(phi e_i, e_k) and S(phi e_i, e_k)
  Mat3 gphi{}, Sphi{};
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k)
      for (int a = 0; a < kDim; ++a) {
        gphi[i][k] += phi[a][i] * geom.g(a, k);
        Sphi[i][k] += phi[a][i] * S[a][k];
      }

  Rank4 B{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          Rational v = geom.R.r[i][j][k][l];
          Rational grp;
          grp += geom.g(i, k) * Q[l][j];
          grp -= S[j][k] * kron(i, l);
          grp -= geom.g(j, k) * Q[l][i];
          grp += S[i][k] * kron(j, l);
          grp += gphi[i][k] * Qphi[l][j];
          grp -= Sphi[j][k] * phi[l][i];
          grp -= gphi[j][k] * Qphi[l][i];
          grp += Sphi[i][k] * phi[l][j];
          grp += 2 * Sphi[i][j] * phi[l][k];
          grp += 2 * gphi[i][j] * Qphi[l][k];
          grp += eta[j] * eta[k] * Q[l][i];
          grp -= eta[j] * S[i][k] * xi[l];
          grp += eta[i] * S[j][k] * xi[l];
          grp -= eta[i] * eta[k] * Q[l][j];
          v += grp / 6;
          v -= (D + 2) / 6 *
               (gphi[i][k] * phi[l][j] - gphi[j][k] * phi[l][i] +
                2 * gphi[i][j] * phi[l][k]);
          v += D / 6 *
               (eta[j] * geom.g(i, k) * xi[l] - eta[j] * eta[k] * kron(i, l) +
                eta[i] * eta[k] * kron(j, l) - eta[i] * geom.g(j, k) * xi[l]);
          v -= (D - 4) / 6 *
               (geom.g(i, k) * kron(j, l) - geom.g(j, k) * kron(i, l));
          B[i][j][k][l] = v;
        }
  return B;
}

std::array<Mat3, kDim> xi_slice(const Rank4& T, const Vec3& xi) {
  std::array<Mat3, kDim> A{};
  for (int i = 0; i < kDim; ++i)
    for (int l = 0; l < kDim; ++l)
      for (int j = 0; j < kDim; ++j)
        for (int a = 0; a < kDim; ++a) A[i][l][j] += xi[a] * T[a][i][j][l];
  return A;
}

ConditionReport derivation_on_sym2(const std::string& id,
                                   const std::array<Mat3, kDim>& A,
                                   const Sym2Tensor& S) {
  ConditionReport rep{id};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        Rational v;
        for (int l = 0; l < kDim; ++l)
          v += A[i][l][j] * S.t[l][k] + S.t[j][l] * A[i][l][k];
        if (v != 0) {
          rep.holds = false;
          rep.where = {i + 1, j + 1, k + 1, 0};
          rep.value = v;
          return rep;
        }
      }
  return rep;
}

ConditionReport einstein_semisymmetry(const FrameGeometry& geom) {
  ConditionReport rep{"R.E=0"};
  const Mat3 E = einstein_tensor(geom).t;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int w = 0; w < kDim; ++w) {
          Rational v;
          for (int l = 0; l < kDim; ++l)
            v += geom.R.r[i][j][k][l] * E[l][w] + E[k][l] * geom.R.r[i][j][w][l];
          if (v != 0) {
            rep.holds = false;
            rep.where = {i + 1, j + 1, k + 1, w + 1};
            rep.value = v;
            return rep;
          }
        }
  return rep;
}

ConditionReport s_wedge_dot_r(const FrameGeometry& geom, const AlmostContactData& acd) {
  ConditionReport rep{"S.R=0"};
  const Mat3& S = geom.ric.S;
  const Vec3& xi = acd.xi.v;
  const Rank4& R = geom.R.r;

  Vec3 Sxi{};  // S(xi, e_m)
  for (int m = 0; m < kDim; ++m)
    for (int a = 0; a < kDim; ++a) Sxi[m] += xi[a] * S[a][m];

  for (int i = 0; i < kDim; ++i) {
    // A = xi ^_S e_i: A e_m = S(e_i, e_m) xi - S(xi, e_m) e_i
    Mat3 A{};
    for (int l = 0; l < kDim; ++l)
      for (int m = 0; m < kDim; ++m)
        A[l][m] = S[i][m] * xi[l] - Sxi[m] * kron(i, l);
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int w = 0; w < kDim; ++w)
          for (int l = 0; l < kDim; ++l) {
            Rational v;
            for (int m = 0; m < kDim; ++m)
              v += A[l][m] * R[j][k][w][m] - A[m][j] * R[m][k][w][l] -
                   A[m][k] * R[j][m][w][l] - A[m][w] * R[j][k][m][l];
            if (v != 0) {
              rep.holds = false;
              rep.where = {j + 1, k + 1, w + 1, l + 1};
              rep.value = v;
              return rep;
            }
          }
  }
  return rep;
}

ConditionReport codazzi_check(const FrameGeometry& geom) {
  ConditionReport rep{"codazzi"};
  Rank3 dS = cov_deriv_sym2(Sym2Tensor{geom.ric.S}, geom.conn);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        Rational v = dS[i][j][k] - dS[j][i][k];
        if (v != 0) {
          rep.holds = false;
          rep.where = {i + 1, j + 1, k + 1, 0};
          rep.value = v;
          return rep;
        }
      }
  return rep;
}

ConditionReport cyclic_parallel_check(const FrameGeometry& geom) {
  ConditionReport rep{"cyclic_parallel"};
  Rank3 dS = cov_deriv_sym2(Sym2Tensor{geom.ric.S}, geom.conn);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        Rational v = dS[i][j][k] + dS[j][k][i] + dS[k][i][j];
        if (v != 0) {
          rep.holds = false;
          rep.where = {i + 1, j + 1, k + 1, 0};
          rep.value = v;
          return rep;
        }
      }
  return rep;
}

std::optional<TorseFormingDecomposition> torse_forming_decompose(
    const FrameGeometry& geom, const VectorField& V) {
  if (is_zero(V.v)) return std::nullopt;
  LinearSystem sys;  // unknowns (f, gamma_1, gamma_2, gamma_3)
  for (int i = 0; i < kDim; ++i) {
    Vec3 dV = geom.cov_deriv_vector(i, V.v);
    for (int k = 0; k < kDim; ++k) {
      std::vector<Rational> row(4);
      row[0] = kron(i, k);
      row[1 + i] = V.v[k];
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(dV[k]);
    }
  }
  SolveResult res = solve_exact(sys);
  if (res.status != SolveStatus::unique) return std::nullopt;
  TorseFormingDecomposition out;
  out.f = res.solution[0];
  for (int i = 0; i < kDim; ++i) out.gamma[i] = res.solution[1 + i];
  return out;
}

}  // namespace sasaki
