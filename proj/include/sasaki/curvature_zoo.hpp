#pragma once

#include <optional>

#include "sasaki/contact.hpp"

namespace sasaki {

// One derivation-type curvature condition: holds iff every component of
// the associated tensor expression is exactly zero; `where`/`value`
// record the first violating component otherwise.
struct ConditionReport {
  std::string id;
  bool holds = true;
  std::array<int, 4> where{};  // 1-based indices
  Rational value;
};

// W2(X,Y)Z = R(X,Y)Z + 1/2 [g(X,Z)QY - g(Y,Z)QX]
Rank4 w2_tensor(const FrameGeometry& geom);

// E = S - (r/3) g
Sym2Tensor einstein_tensor(const FrameGeometry& geom);

// C-Bochner tensor with D = (r+2)/4. The scalar term -S(Y,Z) in the
// classical expression carries the vector slot X: it enters as -S(Y,Z)X.
Rank4 c_bochner_tensor(const FrameGeometry& geom, const AlmostContactData& acd);

// Endomorphism family A(e_i) = T(xi, e_i, ., .) sliced from a (1,3)
// tensor; A[i] maps e_j to sum_l A[i][l][j] e_l.
std::array<Mat3, kDim> xi_slice(const Rank4& T, const Vec3& xi);

// S(A(e_i)e_j, e_k) + S(e_j, A(e_i)e_k) = 0 for all i, j, k.
ConditionReport derivation_on_sym2(const std::string& id,
                                   const std::array<Mat3, kDim>& A,
                                   const Sym2Tensor& S);

// E(R(X,Y)Z,W) + E(Z,R(X,Y)W) = 0 for all frame indices.
ConditionReport einstein_semisymmetry(const FrameGeometry& geom);

// ((xi ^_S e_i) . R)(Y,Z)W = 0, the operator acting as a derivation in
// every slot, with (X ^_S Y)Z := S(Y,Z)X - S(X,Z)Y.
ConditionReport s_wedge_dot_r(const FrameGeometry& geom, const AlmostContactData& acd);

// (nabla_X S)(Y,Z) = (nabla_Y S)(X,Z)
ConditionReport codazzi_check(const FrameGeometry& geom);

// cyclic sum of (nabla S) vanishes
ConditionReport cyclic_parallel_check(const FrameGeometry& geom);

struct TorseFormingDecomposition {
  Rational f;
  Vec3 gamma{};
};

// Exact solve of nabla_{e_i} V = f e_i + gamma(e_i) V; empty optional
// when V is not torse-forming.
std::optional<TorseFormingDecomposition> torse_forming_decompose(
    const FrameGeometry& geom, const VectorField& V);

}  // namespace sasaki
