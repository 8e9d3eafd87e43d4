#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sasaki/tensor.hpp"

namespace sasaki {

// Lie brackets of the frame: [e_i, e_j] = sum_k c[i][j][k] e_k.
struct StructureConstants {
  Rank3 c{};
};

// Constant symmetric positive-definite frame metric, identity by default.
struct FrameMetric {
  Mat3 g = identity_mat3();
};

// Constant-coefficient vector field in the frame basis.
struct VectorField {
  Vec3 v{};
};

struct Sym2Tensor {
  Mat3 t{};
};

// One violated identity component: which rule, at which indices, with
// what nonzero value.
struct Violation {
  std::string rule;
  std::array<int, 4> idx{};  // 1-based, unused slots 0
  Rational value;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

struct InvalidFrame : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gamma[i][j][k] = coefficient of e_k in nabla_{e_i} e_j.
struct Connection {
  Rank3 gamma{};
};

// R[i][j][k][l] = coefficient of e_l in R(e_i,e_j)e_k.
struct CurvatureTensor {
  Rank4 r{};
};

struct RicciData {
  Mat3 S{};  // Ricci 2-tensor
  Mat3 Q{};  // Ricci operator, g(Q e_i, e_j) = S(e_i, e_j)
  Rational r;  // scalar curvature
};

// Antisymmetry and Jacobi, componentwise.
ValidationReport validate_frame(const StructureConstants& c);

// Symmetry and positive-definiteness (leading principal minors).
ValidationReport validate_metric(const FrameMetric& g);

// Koszul formula for a constant-metric frame:
//   2 g(nabla_{e_i} e_j, e_k) =
//     -g(e_i,[e_j,e_k]) + g(e_j,[e_k,e_i]) + g(e_k,[e_i,e_j]).
// Throws InvalidFrame on a frame or metric that fails validation.
Connection koszul_connection(const StructureConstants& c, const FrameMetric& g);

// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z,
// expanded index-by-index for constant Gamma.
CurvatureTensor curvature_tensor(const Connection& conn, const StructureConstants& c);

// S(X,Y) = sum over a g-orthonormal frame of g(R(E_i,X)Y,E_i); computed
// as the g-inverse contraction of the (0,4) tensor so no square roots
// ever appear.
RicciData ricci(const CurvatureTensor& R, const FrameMetric& g);

// (nabla_{e_i} T)(e_j, e_k) for a constant-component symmetric 2-tensor.
Rank3 cov_deriv_sym2(const Sym2Tensor& T, const Connection& conn);

// (L_V g)(e_i, e_j) = g(nabla_{e_i} V, e_j) + g(nabla_{e_j} V, e_i).
Sym2Tensor lie_derivative_metric(const VectorField& V, const Connection& conn,
                                 const FrameMetric& g);

// Everything derivable from (c, g), computed once. Immutable after
// construction.
struct FrameGeometry {
  StructureConstants c;
  FrameMetric metric;
  Mat3 g_inv{};
  Connection conn;
  CurvatureTensor R;
  Rank4 R4{};  // g(R(e_i,e_j)e_k, e_l)
  RicciData ric;

  static FrameGeometry derive(const StructureConstants& c, const FrameMetric& g);

  Rational g(int i, int j) const { return metric.g[i][j]; }
  // nabla_{e_i} V for a constant-coefficient field.
  Vec3 cov_deriv_vector(int i, const Vec3& V) const;
  // Frame inner product g(u, w).
  Rational inner(const Vec3& u, const Vec3& w) const;
};

Mat3 inverse(const Mat3& m);  // throws on singular input

}  // namespace sasaki
