#pragma once

#include "pearllab/exact.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace pearllab {

/// Symmetric bilinear form over F_p, p an odd prime.
struct BilinearForm {
  std::size_t n = 0;
  IMat b;  // n x n, entries reduced mod p
  std::uint64_t p = 0;

  void validate() const;
};

/// The form 2*zeta*q with q = [[2,1,1],[1,2,1],[1,1,2]] over F_5.
BilinearForm torus_form(std::uint64_t zeta_rep, std::uint64_t p = 5);

/// The zero form in dimension n (exterior algebra).
BilinearForm zero_form(std::size_t n, std::uint64_t p = 5);

/// Element of Cl(V, B): 2^n coefficients in F_p indexed by subset
/// bitmasks; basis monomial e_S has generators in increasing order.
struct CliffordElement {
  std::vector<std::uint64_t> c;

  bool operator==(const CliffordElement& o) const { return c == o.c; }
  bool is_zero() const;
};

CliffordElement clifford_zero(const BilinearForm& form);
CliffordElement clifford_one(const BilinearForm& form);
CliffordElement clifford_generator(const BilinearForm& form, std::size_t i);

CliffordElement clifford_add(const CliffordElement& a, const CliffordElement& b,
                             const BilinearForm& form);
CliffordElement clifford_scale(const CliffordElement& a, std::uint64_t s,
                               const BilinearForm& form);

/// Product under the relation e_i e_j + e_j e_i = B_ij (so e_i^2 = B_ii/2).
CliffordElement clifford_multiply(const CliffordElement& a, const CliffordElement& b,
                                  const BilinearForm& form);

/// Kernel basis of a (super)commutator map, split by Z/2-parity.
struct SubspaceSplit {
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::vector<CliffordElement> basis;

  std::size_t dim() const { return even_dim + odd_dim; }
};

SubspaceSplit center(const BilinearForm& form);
SubspaceSplit supercenter(const BilinearForm& form);

/// z = f1 f2 ... fn for a congruence-orthogonal generator set; requires
/// B nondegenerate and n odd. Returns z and the scalar z^2.
std::pair<CliffordElement, std::uint64_t> central_odd_element(const BilinearForm& form);

/// Primitive idempotent in the even subalgebra and dim(Cl0 * e).
struct EvenSplit {
  CliffordElement idempotent;
  std::size_t module_dim = 0;
};

EvenSplit even_split(const BilinearForm& form);

/// Z/2-graded module given by degrees and generator action matrices.
struct GradedModule {
  std::size_t dim = 0;
  std::vector<int> degrees;       // 0 or 1 per basis vector
  std::vector<IMat> actions;      // one per generator, entries mod p
  std::uint64_t p = 0;
};

/// S* = Cl (x)_{Cl0} S: rank-4 graded module with verified relations.
GradedModule induce_graded_spin(const BilinearForm& form);

/// Direct sum M (+) N of graded modules over the same form.
GradedModule graded_direct_sum(const GradedModule& m, const GradedModule& n);

/// Shift the grading of every basis vector by one.
GradedModule graded_shift(const GradedModule& m);

/// Dimensions of the degree-0 and degree-1 intertwiner spaces.
std::pair<std::size_t, std::size_t> graded_hom(const GradedModule& m, const GradedModule& n);

/// The constant c with End(S*) = F[x]/(x^2 - c); well-defined as a
/// square class. Throws if the odd Hom space is not one-dimensional.
std::uint64_t ext_presentation(const BilinearForm& form);

bool is_nonzero_square_mod_p(std::uint64_t a, std::uint64_t p);
bool same_square_class(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// (dim HH^0_super, dim HH^1_super) = (supercenter, superderivations
/// modulo inner superderivations).
std::pair<std::size_t, std::size_t> hochschild_low(const BilinearForm& form);

}  // namespace pearllab
