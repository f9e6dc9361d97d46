#pragma once

#include "pearllab/exact.hpp"

#include <array>
#include <map>
#include <string>

namespace pearllab {

/// Polynomial in the classes H, E with integer coefficients,
/// keyed by (deg H, deg E).
using HEPoly = std::map<std::pair<int, int>, Int>;

HEPoly parse_he_poly(const std::string& text);
std::string he_poly_to_string(const HEPoly& p);

/// Quotient presentation Z[H,E]/(H² = k·E + R, E² = Q) with c₁ = ℓ·H.
struct QHPresentation {
  std::string name;
  Int k;
  HEPoly r;
  HEPoly q;
  Int ell;

  /// Rewriting must strictly drop (deg H, then deg E at fixed deg H);
  /// checked structurally at load.
  void validate() const;
};

/// Built-in table keyed by delta | T | O | I.
QHPresentation presentation_by_name(const std::string& name);

/// Element in the reduced basis (1, H, E, HE).
struct QHElement {
  std::array<Int, 4> c{Int(0), Int(0), Int(0), Int(0)};

  bool operator==(const QHElement& o) const { return c == o.c; }
};

QHElement normal_form(const HEPoly& p, const QHPresentation& pres);

QHElement multiply(const QHElement& a, const QHElement& b, const QHPresentation& pres);

HEPoly to_poly(const QHElement& e);

/// Matrix of multiplication by c₁ = ℓ·H on the basis (1, H, E, HE).
IMat c1_matrix(const QHPresentation& pres);

/// True iff the characteristic polynomial of c₁★ vanishes at m0 mod p.
bool eigenvalue_test(const Int& m0, const QHPresentation& pres, std::uint64_t p);

std::set<std::uint64_t> spectrum_mod_p(const QHPresentation& pres, std::uint64_t p);

}  // namespace pearllab
