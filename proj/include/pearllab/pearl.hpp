#pragma once

#include "pearllab/complexes.hpp"

#include <set>

namespace pearllab {

struct SignChoice {
  int x = 1, y = 1, z = 1;

  void validate() const {
    if ((x != 1 && x != -1) || (y != 1 && y != -1) || (z != 1 && z != -1))
      throw std::invalid_argument("signs must be +1 or -1");
  }
};

/// Morse differential of the index-1 generators x_i' in the basis
/// x_1, x_2, x_3 (row i = image of x_i').
IMat morse_matrix();

/// Pure Morse cochain complex of the orbit space, collapsed to the
/// Z/2-grading (generators m'(0), x_i'(1), x_i(2), m(3), no disc terms).
GradedComplex morse_only_complex();

/// Pearl complex with sign parameters and monodromy weight.
/// Basis order: even (m', x1, x2, x3), odd (m, x1', x2', x3').
/// zeta_rep is the integer representative of the monodromy in [1, p);
/// Maslov 2 disc terms are weighted by zeta, Maslov 4 terms by zeta².
/// Over Z (no local system) pass zeta_rep = 1.
GradedComplex build_chiang_complex(const SignChoice& s, std::uint64_t zeta_rep = 1);

/// Integer determinant of the odd-to-even differential.
Int chiang_determinant(const SignChoice& s, std::uint64_t zeta_rep = 1);

std::pair<ZHomology, ZHomology> floer_cohomology_Z(const SignChoice& s);

std::pair<std::size_t, std::size_t> floer_cohomology_mod_p(const SignChoice& s,
                                                           std::uint64_t zeta_rep,
                                                           std::uint64_t p);

struct DetScanRow {
  SignChoice signs;
  std::uint64_t zeta = 1;
  Int det;
  std::set<std::uint64_t> primes;
  bool hf_nonzero_mod5 = false;
  bool identity_holds = false;  // |det| == zeta² * |8Z - 3XY|
};

/// All 8 sign choices x 4 monodromy representatives.
std::vector<DetScanRow> det_formula_scan();

/// Obstruction count of the Chiang Lagrangian with monodromy zeta: 3*zeta mod 5.
Fp m0_chiang(std::uint64_t zeta_rep);

}  // namespace pearllab
