#include "pearllab/complexes.hpp"

namespace pearllab {

void check_shapes(const GradedComplex& c) {
  const std::size_t ne = c.basis.even.size(), no = c.basis.odd.size();
  if (c.d_even_to_odd.rows() != no || c.d_even_to_odd.cols() != ne ||
      c.d_odd_to_even.rows() != ne || c.d_odd_to_even.cols() != no)
    throw std::invalid_argument("differential shapes do not match basis");
  for (const Generator& g : c.basis.even)
    if (g.degree() != 0) throw std::invalid_argument("even generator with odd index");
  for (const Generator& g : c.basis.odd)
    if (g.degree() != 1) throw std::invalid_argument("odd generator with even index");
}

bool verify_d_squared(const GradedComplex& c) {
  check_shapes(c);
  return (c.d_odd_to_even * c.d_even_to_odd).is_zero() &&
         (c.d_even_to_odd * c.d_odd_to_even).is_zero();
}

bool verify_d_squared_mod_p(const GradedComplex& c, std::uint64_t p) {
  check_shapes(c);
  IMat a = c.d_odd_to_even * c.d_even_to_odd;
  IMat b = c.d_even_to_odd * c.d_odd_to_even;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (mod_p(a.at(i, j), p) != 0) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (mod_p(b.at(i, j), p) != 0) return false;
  return true;
}

std::pair<std::size_t, std::size_t> homology_over_field(const GradedComplex& c,
                                                        std::uint64_t p) {
  if (!verify_d_squared_mod_p(c, p)) throw std::domain_error("d^2 != 0 mod p");
  const std::size_t ne = c.basis.even.size(), no = c.basis.odd.size();
  const std::size_t r_eo = rank_mod_p(c.d_even_to_odd, p);
  const std::size_t r_oe = rank_mod_p(c.d_odd_to_even, p);
  return {ne - r_eo - r_oe, no - r_oe - r_eo};
}

namespace {

// H = ker(out)/im(in), with out∘in = 0 over Z.
ZHomology degree_homology(const IMat& out, const IMat& in) {
  SNFResult snf_out = smith_normal_form(out);
  const std::size_t n = out.cols();
  std::vector<std::size_t> ker_idx;
  for (std::size_t j = 0; j < n; ++j) {
    bool zero_col = j >= std::min(out.rows(), out.cols()) || snf_out.D.at(j, j) == 0;
    if (zero_col) ker_idx.push_back(j);
  }
  // coordinates of im(in) in the saturated kernel basis (rows of Vinv * in)
  IMat w = snf_out.Vinv * in;
  IMat x(ker_idx.size(), in.cols());
  for (std::size_t r = 0; r < ker_idx.size(); ++r)
    for (std::size_t j = 0; j < in.cols(); ++j) x.at(r, j) = w.at(ker_idx[r], j);

  SNFResult snf_x = smith_normal_form(x);
  ZHomology h;
  h.free_rank = ker_idx.size() - snf_x.rank;
  for (std::size_t t = 0; t < snf_x.rank; ++t)
    if (snf_x.D.at(t, t) > 1) h.torsion.push_back(snf_x.D.at(t, t));
  return h;
}

}  // namespace

std::pair<ZHomology, ZHomology> homology_over_Z(const GradedComplex& c) {
  if (!verify_d_squared(c)) throw std::domain_error("d^2 != 0");
  return {degree_homology(c.d_even_to_odd, c.d_odd_to_even),
          degree_homology(c.d_odd_to_even, c.d_even_to_odd)};
}

}  // namespace pearllab
