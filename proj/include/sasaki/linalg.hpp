#pragma once

#include <vector>

#include "sasaki/rational.hpp"

namespace sasaki {

struct LinearSystem {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
  SolveStatus status;
  std::vector<Rational> solution;  // filled only for unique
};

// Exact Gaussian elimination, pivot on the first nonzero entry.
SolveResult solve_exact(const LinearSystem& system);

}  // namespace sasaki
