#pragma once

// Test-only oracles, deliberately independent of the engine's index
// expansions: curvature via the operator definition applied to frame
// fields, Ricci as a plain orthonormal trace.

#include "sasaki/frame.hpp"

namespace sasaki::oracle {

inline Vec3 nabla(const Connection& conn, int i, const Vec3& V) {
  Vec3 out{};
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) out[k] += V[j] * conn.gamma[i][j][k];
  return out;
}

// R(e_i,e_j)e_k = nabla_i(nabla_j e_k) - nabla_j(nabla_i e_k)
//                 - nabla_{[e_i,e_j]} e_k, evaluated as operator
// applications on constant-coefficient fields.
inline Vec3 curvature_vec(const Connection& conn, const StructureConstants& sc,
                          int i, int j, int k) {
  Vec3 ek{};
  ek[k] = 1;
  Vec3 term1 = nabla(conn, i, nabla(conn, j, ek));
  Vec3 term2 = nabla(conn, j, nabla(conn, i, ek));
  Vec3 out = sub(term1, term2);
  for (int m = 0; m < kDim; ++m)
    out = sub(out, scale(sc.c[i][j][m], nabla(conn, m, ek)));
  return out;
}

// Orthonormal-frame Ricci trace; valid for the identity metric only.
inline Mat3 ricci_identity_metric(const Connection& conn,
                                  const StructureConstants& sc) {
  Mat3 S{};
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k)
      for (int i = 0; i < kDim; ++i)
        S[j][k] += curvature_vec(conn, sc, i, j, k)[i];
  return S;
}

}  // namespace sasaki::oracle
