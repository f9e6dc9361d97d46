#pragma once

#include "pearllab/exact.hpp"

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace pearllab {

using Cx = std::complex<double>;

/// Element of Q(sqrt(3)): r + s*sqrt(3).
struct QuadRat {
  Rat r{0};
  Rat s{0};

  bool is_zero() const { return r == 0 && s == 0; }
  QuadRat operator+(const QuadRat& o) const { return {r + o.r, s + o.s}; }
  QuadRat operator-(const QuadRat& o) const { return {r - o.r, s - o.s}; }
  QuadRat operator*(const QuadRat& o) const {
    return {r * o.r + Rat(3) * s * o.s, r * o.s + s * o.r};
  }
};

/// Element of Q(sqrt(3), i).
struct ExactComplex {
  QuadRat re;
  QuadRat im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ExactComplex conj() const { return {re, {-im.r, -im.s}}; }
  ExactComplex operator*(const ExactComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  /// |z|^2 as an element of Q(sqrt(3)).
  QuadRat norm_sq() const { return re * re + im * im; }
  Cx to_double() const;
};

/// Degree-n binary form; index k stores the coefficient of x^(n-k) y^k.
struct BinaryForm {
  int n = 0;
  std::vector<Cx> v;

  void validate() const;
};

struct ExactBinaryForm {
  int n = 0;
  std::vector<ExactComplex> v;

  BinaryForm to_double() const;
};

/// Stored configurations delta | T | O | I (exact coefficients).
ExactBinaryForm configuration(const std::string& name);

/// 2x2 complex matrix acting on binary forms; det 1 expected.
struct GroupElement {
  Cx a{1}, b{0}, c{0}, d{1};

  Cx det() const { return a * d - b * c; }
};

/// 2x2 complex matrix value of the moment map.
struct MomentValue {
  std::array<Cx, 4> m{};  // row-major (0,0),(0,1),(1,0),(1,1)

  double norm() const;
};

MomentValue moment_map(int n, const BinaryForm& form);

/// True when every adjacent coefficient product v_k * conj(v_{k+1}) vanishes,
/// so the off-diagonal moment terms are exactly zero.
bool adjacent_products_vanish(const ExactBinaryForm& form);

/// Exact diagonal sum (n-2k)|u_k|^2; requires adjacent products to vanish
/// so the answer certifies the full moment map.
QuadRat exact_moment_diagonal(const ExactBinaryForm& form);

bool verify_lagrangian_orbit(const std::string& name);

/// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2 on (v0,v1,v2,v3).
Cx discriminant_cubic(const BinaryForm& form);

struct SecantImage {
  std::array<Cx, 3> w{};
  bool indeterminate = false;
};

/// [u0 u2 - u1^2 : u0 u3 - u1 u2 : u1 u3 - u2^2].
SecantImage secant_projection(const BinaryForm& form);

/// p(x, y) -> p(a x + c y, b x + d y) for g = [[a, b], [c, d]].
BinaryForm sym3_action(const GroupElement& g, const BinaryForm& form);

enum class DiscKind { maslov2, maslov4 };

struct DiscSample {
  DiscKind kind;
  std::vector<double> theta;
  std::vector<BinaryForm> boundary;
};

struct GeomConfig {
  double lagrangian_tol = 1e-9;
  double winding_tol = 1e-6;
  double residual_tol = 1e-10;
  double perturbed_moment_min = 1e-3;
};

/// Boundary loop of the axial disc of the given kind; every sample is
/// checked to lie on the Lagrangian orbit.
DiscSample axial_disc(DiscKind kind, std::size_t samples,
                      const GeomConfig& cfg = GeomConfig());

/// 2 x (winding number of the boundary discriminant loop).
int maslov_via_winding(const DiscSample& d, const GeomConfig& cfg = GeomConfig());

struct IntersectionResult {
  // each family: (theta1, theta3) with theta2 normalized to 0
  std::vector<std::pair<double, double>> families;
  int perturbed_count = 0;
  double max_residual = 0;
  double cos_theta1 = 0;
};

/// Solutions of sqrt(3) e^{i th1} + 2 + sqrt(3) e^{i th3} = 0.
IntersectionResult torus_chiang_intersection(const GeomConfig& cfg = GeomConfig());

struct BookkeepingResult {
  Int mu_tilde;      // from mu(u) = mu(tilde u) + 2 [tilde u].E
  Rat eq2_value;     // 2 [tilde u].E + (2/3) mu(p(tilde u))
  bool consistent = false;
};

BookkeepingResult maslov_bookkeeping(const Int& mu_u, const Int& dot_e, const Int& mu_proj);

struct CaseBResult {
  bool inconsistent = false;
  std::size_t rank_coeff = 0;
  std::size_t rank_augmented = 0;
  std::vector<Int> certificate;  // y with y^T A = 0, y^T b != 0
};

/// Linear system {4a+4b+c+2d=0, 2a+b+d=0, b+c=1, b=1} with its
/// inconsistency certificate.
CaseBResult case_b_contradiction();

}  // namespace pearllab
