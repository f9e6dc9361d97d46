#pragma once

#include <array>
#include <tuple>
#include <vector>

namespace pearllab {

struct OhDimensions {
  long ker = 0;
  long coker = 0;
  long index = 0;
};

/// ker = sum over kappa_i >= 0 of (kappa_i + 1); coker = sum over
/// kappa_i <= -1 of (-kappa_i - 1); index = sum kappa_i + n.
OhDimensions oh_dimensions(const std::vector<long>& kappa);

/// All partial indices >= -1.
bool is_regular(const std::vector<long>& kappa);

bool is_nonneg(const std::vector<long>& kappa);

/// Sorted multisets of n nonnegative integers summing to mu.
std::vector<std::vector<long>> enumerate_cases(long mu, long n);

struct Kappa1Evaluation {
  std::array<double, 4> m{};  // row-major 2x2
  double det = 0;
};

/// Two-point evaluation of the kappa=1 section space c z + conj(c) at
/// boundary angles: row j = (2 cos(a_j/2), -2 sin(a_j/2)).
Kappa1Evaluation kappa1_evaluation(double a1, double a2);

}  // namespace pearllab
