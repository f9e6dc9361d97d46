#pragma once

#include "pearllab/exact.hpp"

#include <string>
#include <vector>

namespace pearllab {

struct Generator {
  std::string label;
  int morse_index = 0;

  int degree() const { return ((morse_index % 2) + 2) % 2; }
};

struct GradedBasis {
  std::vector<Generator> even;
  std::vector<Generator> odd;
};

/// Z/2-graded cochain complex; differentials raise Morse index.
/// d_even_to_odd maps even cochains to odd ones (columns = even
/// generators, rows = odd generators) and vice versa. Entries are
/// integers; local-system weights are baked in by the builder.
struct GradedComplex {
  GradedBasis basis;
  IMat d_even_to_odd;
  IMat d_odd_to_even;
};

struct LocalSystem {
  std::uint64_t group_order = 4;
  Fp monodromy;
};

struct ZHomology {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility order
};

void check_shapes(const GradedComplex& c);

/// True iff both composites d∘d vanish (over Z, hence over every ring
/// they reduce to). Throws on shape mismatch.
bool verify_d_squared(const GradedComplex& c);

bool verify_d_squared_mod_p(const GradedComplex& c, std::uint64_t p);

/// (dim H_even, dim H_odd) over F_p. Requires d² = 0 mod p.
std::pair<std::size_t, std::size_t> homology_over_field(const GradedComplex& c,
                                                        std::uint64_t p);

/// Integral homology per degree, via Smith normal form.
std::pair<ZHomology, ZHomology> homology_over_Z(const GradedComplex& c);

}  // namespace pearllab
