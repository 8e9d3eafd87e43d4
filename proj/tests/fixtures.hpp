#pragma once

// Shared helpers: frame-identity checks over a derived geometry and a
// deterministic random-instance generator for the Kenmotsu / su(2)
// families with basis relabelings.

#include <random>
#include <string>
#include <vector>

#include "sasaki/harness.hpp"

namespace sasaki::testing {

// Returns the names of all violated frame identities (empty = all hold):
// torsion-free, metric compatibility, curvature antisymmetry, first and
// second Bianchi, (0,4) pair symmetry, Ricci symmetry, trace consistency.
inline std::vector<std::string> frame_identity_failures(const FrameGeometry& geom) {
  std::vector<std::string> bad;
  const Rank3& G = geom.conn.gamma;
  const Rank4& R = geom.R.r;
  const Rank4& R4 = geom.R4;

  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        if (G[i][j][k] - G[j][i][k] != geom.c.c[i][j][k]) {
          bad.push_back("torsion_free");
          goto after_torsion;
        }
after_torsion:
  if (!is_zero(cov_deriv_sym2(Sym2Tensor{geom.metric.g}, geom.conn)))
    bad.push_back("metric_compatibility");

  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l)
          if (R[i][j][k][l] != -R[j][i][k][l]) {
            bad.push_back("curvature_antisymmetry");
            goto after_antisym;
          }
after_antisym:
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l)
          if (R[i][j][k][l] + R[j][k][i][l] + R[k][i][j][l] != 0) {
            bad.push_back("first_bianchi");
            goto after_bianchi1;
          }
after_bianchi1:
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l)
          if (R4[i][j][k][l] != R4[k][l][i][j]) {
            bad.push_back("pair_symmetry");
            goto after_pair;
          }
after_pair: {
  // (nabla_i R)[j][k][l][m], constant components.
  auto covR = [&](int i, int j, int k, int l, int m) {
    Rational v;
    for (int p = 0; p < kDim; ++p)
      v += R[j][k][l][p] * G[i][p][m] - G[i][j][p] * R[p][k][l][m] -
           G[i][k][p] * R[j][p][l][m] - G[i][l][p] * R[j][k][p][m];
    return v;
  };
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l)
          for (int m = 0; m < kDim; ++m)
            if (covR(i, j, k, l, m) + covR(j, k, i, l, m) +
                    covR(k, i, j, l, m) !=
                0) {
              bad.push_back("second_bianchi");
              goto after_bianchi2;
            }
}
after_bianchi2:
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (geom.ric.S[i][j] != geom.ric.S[j][i]) {
        bad.push_back("ricci_symmetry");
        goto after_ricci_sym;
      }
after_ricci_sym: {
  Rational tr;
  for (int i = 0; i < kDim; ++i) tr += geom.ric.Q[i][i];
  if (tr != geom.ric.r) bad.push_back("trace_consistency");
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      Rational v;
      for (int k = 0; k < kDim; ++k)
        v += geom.metric.g[j][k] * geom.ric.Q[k][i];
      if (v != geom.ric.S[i][j]) {
        bad.push_back("q_metric_dual");
        return bad;
      }
    }
}
  return bad;
}

// Relabels a fixture through a basis permutation (and optional phi sign
// flip); all structural identities are invariant under this.
inline Fixture relabel(const Fixture& fx, const std::array<int, kDim>& sigma,
                       bool flip_phi) {
  Fixture out = fx;
  out.name = fx.name + "+relabel";
  out.published_values.clear();
  for (int p = 0; p < kDim; ++p)
    for (int q = 0; q < kDim; ++q)
      for (int m = 0; m < kDim; ++m)
        out.c.c[p][q][m] = fx.c.c[sigma[p]][sigma[q]][sigma[m]];
  for (int p = 0; p < kDim; ++p)
    for (int q = 0; q < kDim; ++q) {
      out.phi[p][q] = fx.phi[sigma[p]][sigma[q]];
      if (flip_phi) out.phi[p][q] = -out.phi[p][q];
    }
  for (int p = 0; p < kDim; ++p) out.xi.v[p] = fx.xi.v[sigma[p]];
  return out;
}

struct RandomInstances {
  std::vector<Fixture> fixtures;
};

// >= `count` instances drawn from ken(c) and su2(a) with rational
// parameters in [-5, 5], each under a random relabeling.
inline RandomInstances random_family_instances(int count, unsigned seed = 1789) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> perm(0, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                    {0, 2, 1},
                                                    {1, 0, 2},
                                                    {1, 2, 0},
                                                    {2, 0, 1},
                                                    {2, 1, 0}}};
  RandomInstances out;
  for (int n = 0; n < count; ++n) {
    Rational p = rat(num(rng), den(rng));
    if (p > 5) p = 5;
    if (p < -5) p = -5;
    Fixture base = (n % 2 == 0) ? fixture_ken(p) : fixture_su2(p);
    out.fixtures.push_back(relabel(base, perms[perm(rng)], coin(rng) == 1));
  }
  return out;
}

}  // namespace sasaki::testing
