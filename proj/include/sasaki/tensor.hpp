#pragma once

#include <array>

#include "sasaki/rational.hpp"

namespace sasaki {

// Everything is a 3-dimensional frame geometry.
inline constexpr int kDim = 3;

using Vec3 = std::array<Rational, kDim>;
using Mat3 = std::array<Vec3, kDim>;
using Rank3 = std::array<Mat3, kDim>;
using Rank4 = std::array<Rank3, kDim>;

inline bool is_zero(const Vec3& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const Mat3& m) {
  for (const auto& row : m)
    if (!is_zero(row)) return false;
  return true;
}

inline bool is_zero(const Rank3& t) {
  for (const auto& m : t)
    if (!is_zero(m)) return false;
  return true;
}

inline bool is_zero(const Rank4& t) {
  for (const auto& r : t)
    if (!is_zero(r)) return false;
  return true;
}

inline Mat3 identity_mat3() {
  Mat3 m{};
  for (int i = 0; i < kDim; ++i) m[i][i] = 1;
  return m;
}

// v + w, a*v and friends; kept as free helpers rather than operator
// overloads on std::array.
inline Vec3 add(const Vec3& a, const Vec3& b) {
  Vec3 r{};
  for (int i = 0; i < kDim; ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec3 sub(const Vec3& a, const Vec3& b) {
  Vec3 r{};
  for (int i = 0; i < kDim; ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec3 scale(const Rational& s, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < kDim; ++i) r[i] = s * v[i];
  return r;
}

// Matrix acting on a frame vector: (M v)_i = sum_j M[i][j] v_j.
inline Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

}  // namespace sasaki
