#include "pearllab/pearl.hpp"

namespace pearllab {

IMat morse_matrix() {
  return IMat(3, 3, {Int(1), Int(1), Int(2),
                     Int(2), Int(1), Int(1),
                     Int(1), Int(2), Int(1)});
}

namespace {

GradedBasis chiang_basis() {
  GradedBasis b;
  b.even = {{"m'", 0}, {"x1", 2}, {"x2", 2}, {"x3", 2}};
  b.odd = {{"m", 3}, {"x1'", 1}, {"x2'", 1}, {"x3'", 1}};
  return b;
}

}  // namespace

GradedComplex morse_only_complex() {
  GradedComplex c;
  c.basis = chiang_basis();
  c.d_even_to_odd = IMat(4, 4);
  c.d_odd_to_even = IMat(4, 4);
  IMat m = morse_matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      c.d_odd_to_even.at(1 + j, 1 + i) = m.at(i, j);  // d x_i' hits x_j
  return c;
}

GradedComplex build_chiang_complex(const SignChoice& s, std::uint64_t zeta_rep) {
  s.validate();
  if (zeta_rep == 0) throw std::invalid_argument("monodromy representative must be a unit");
  const Int zeta(zeta_rep);

  GradedComplex c = morse_only_complex();
  // d m = zeta*Y*(x1+x2+x3) + 2*zeta^2*Z*m'   (Maslov 2 resp. 4 discs)
  c.d_odd_to_even.at(0, 0) = 2 * zeta * zeta * Int(s.z);
  for (std::size_t j = 1; j <= 3; ++j) c.d_odd_to_even.at(j, 0) = zeta * Int(s.y);
  // d x_i' picks up the Maslov 2 term zeta*X*m'
  for (std::size_t i = 1; i <= 3; ++i) c.d_odd_to_even.at(0, i) = zeta * Int(s.x);
  return c;
}

Int chiang_determinant(const SignChoice& s, std::uint64_t zeta_rep) {
  return determinant(build_chiang_complex(s, zeta_rep).d_odd_to_even);
}

std::pair<ZHomology, ZHomology> floer_cohomology_Z(const SignChoice& s) {
  return homology_over_Z(build_chiang_complex(s));
}

std::pair<std::size_t, std::size_t> floer_cohomology_mod_p(const SignChoice& s,
                                                           std::uint64_t zeta_rep,
                                                           std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (zeta_rep != 1) {
    // monodromy must be a fourth root of unity mod p
    Fp z(zeta_rep, p);
    if (z.residue() == 0 || !(z.pow(4) == Fp(1, p)))
      throw std::invalid_argument("monodromy is not a fourth root of unity mod p");
  }
  return homology_over_field(build_chiang_complex(s, zeta_rep), p);
}

std::vector<DetScanRow> det_formula_scan() {
  std::vector<DetScanRow> rows;
  for (int x : {1, -1})
    for (int y : {1, -1})
      for (int z : {1, -1})
        for (std::uint64_t zeta : {1, 2, 3, 4}) {
          DetScanRow r;
          r.signs = {x, y, z};
          r.zeta = zeta;
          r.det = chiang_determinant(r.signs, zeta);
          r.primes = prime_divisors(r.det);
          r.hf_nonzero_mod5 = mod_p(r.det, 5) == 0;
          Int expected = Int(zeta) * Int(zeta) * abs(Int(8) * z - Int(3) * x * y);
          r.identity_holds = abs(r.det) == expected;
          rows.push_back(r);
        }
  return rows;
}

Fp m0_chiang(std::uint64_t zeta_rep) {
  Fp z(zeta_rep, 5);
  if (z.residue() == 0) throw std::invalid_argument("monodromy must be a unit mod 5");
  return Fp(3, 5) * z;
}

}  // namespace pearllab
