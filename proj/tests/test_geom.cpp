#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pearllab/geom.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace pearllab;

namespace {

constexpr double kPi = std::numbers::pi;

GroupElement random_su2(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1, 1);
  double a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
  double n = std::sqrt(a * a + b * b + c * c + d * d);
  Cx alpha(a / n, b / n), beta(c / n, d / n);
  return {alpha, beta, -std::conj(beta), std::conj(alpha)};
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,  //
          g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

double form_distance(const BinaryForm& f, const BinaryForm& g) {
  double d = 0;
  for (std::size_t i = 0; i < f.v.size(); ++i) d = std::max(d, std::abs(f.v[i] - g.v[i]));
  return d;
}

/// Projective distance: minimize over a unit-scalar alignment.
double projective_distance(const BinaryForm& f, const BinaryForm& g) {
  std::size_t big = 0;
  for (std::size_t i = 1; i < f.v.size(); ++i)
    if (std::abs(f.v[i]) > std::abs(f.v[big])) big = i;
  Cx scale = f.v[big] / g.v[big];
  BinaryForm h = g;
  for (Cx& z : h.v) z *= scale;
  return form_distance(f, h);
}

}  // namespace

TEST_CASE("stored configurations lie in the zero level of the moment map") {
  for (const std::string& name : {"delta", "T", "O", "I"}) {
    ExactBinaryForm f = configuration(name);
    CHECK(adjacent_products_vanish(f));
    CHECK(exact_moment_diagonal(f).is_zero());
    CHECK(verify_lagrangian_orbit(name));
    // floating evaluation agrees
    CHECK(moment_map(f.n, f.to_double()).norm() <= 1e-12);
  }
  CHECK_THROWS(configuration("Q"));
}

TEST_CASE("moment map detects non-Lagrangian points") {
  BinaryForm cube;
  cube.n = 3;
  cube.v = {Cx(1), Cx(0), Cx(0), Cx(0)};  // x^3
  CHECK(moment_map(3, cube).norm() > 1.0);
  BinaryForm perturbed;
  perturbed.n = 3;
  perturbed.v = {Cx(1), Cx(0), Cx(3), Cx(0.1)};
  CHECK(moment_map(3, perturbed).norm() > 1e-3);
}

TEST_CASE("moment map is anti-Hermitian, traceless, and equivariant") {
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> dist(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    BinaryForm f;
    f.n = 3;
    f.v.resize(4);
    for (Cx& z : f.v) z = Cx(dist(rng), dist(rng));
    MomentValue mv = moment_map(3, f);
    CHECK(std::abs(mv.m[0] + std::conj(mv.m[0])) <= 1e-12);
    CHECK(std::abs(mv.m[0] + mv.m[3]) <= 1e-12);
    CHECK(std::abs(mv.m[1] + std::conj(mv.m[2])) <= 1e-9);
    GroupElement g = random_su2(rng);
    MomentValue lhs = moment_map(3, sym3_action(g, f));
    // g mu g^{-1} with g^{-1} = conjugate transpose for SU(2)
    GroupElement ginv{std::conj(g.a), std::conj(g.c), std::conj(g.b), std::conj(g.d)};
    std::array<Cx, 4> gm = {g.a * mv.m[0] + g.b * mv.m[2], g.a * mv.m[1] + g.b * mv.m[3],
                            g.c * mv.m[0] + g.d * mv.m[2], g.c * mv.m[1] + g.d * mv.m[3]};
    std::array<Cx, 4> rhs = {gm[0] * ginv.a + gm[1] * ginv.c, gm[0] * ginv.b + gm[1] * ginv.d,
                             gm[2] * ginv.a + gm[3] * ginv.c, gm[2] * ginv.b + gm[3] * ginv.d};
    double diff = 0;
    for (std::size_t i = 0; i < 4; ++i) diff = std::max(diff, std::abs(lhs.m[i] - rhs[i]));
    CHECK(diff <= 1e-9);
  }
}

TEST_CASE("cubic discriminant") {
  BinaryForm delta = configuration("delta").to_double();
  CHECK(std::abs(discriminant_cubic(delta) - Cx(-108)) <= 1e-12);
  BinaryForm cube;
  cube.n = 3;
  cube.v = {Cx(1), Cx(0), Cx(0), Cx(0)};
  CHECK(std::abs(discriminant_cubic(cube)) <= 1e-15);
  BinaryForm xxy;
  xxy.n = 3;
  xxy.v = {Cx(0), Cx(1), Cx(0), Cx(0)};  // x^2 y
  CHECK(std::abs(discriminant_cubic(xxy)) <= 1e-15);
}

TEST_CASE("discriminant is invariant under det-1 substitutions") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    BinaryForm f;
    f.n = 3;
    f.v.resize(4);
    for (Cx& z : f.v) z = Cx(dist(rng), dist(rng));
    GroupElement g = random_su2(rng);
    CHECK(std::abs(discriminant_cubic(sym3_action(g, f)) - discriminant_cubic(f)) <= 1e-9);
  }
}

TEST_CASE("secant projection") {
  BinaryForm cube;
  cube.n = 3;
  cube.v = {Cx(1), Cx(0), Cx(0), Cx(0)};
  CHECK(secant_projection(cube).indeterminate);
  BinaryForm delta = configuration("delta").to_double();
  SecantImage img = secant_projection(delta);
  CHECK_FALSE(img.indeterminate);
  CHECK(std::abs(img.w[0] - Cx(3)) <= 1e-12);
  CHECK(std::abs(img.w[1]) <= 1e-12);
  CHECK(std::abs(img.w[2] - Cx(-9)) <= 1e-12);
  // real input gives a real image
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    BinaryForm f;
    f.n = 3;
    f.v = {Cx(dist(rng)), Cx(dist(rng)), Cx(dist(rng)), Cx(dist(rng))};
    SecantImage s = secant_projection(f);
    for (const Cx& z : s.w) CHECK(std::abs(std::imag(z)) <= 1e-12);
  }
}

TEST_CASE("sym3 action: identity, stabilizer, composition") {
  BinaryForm delta = configuration("delta").to_double();
  GroupElement id;
  CHECK(form_distance(sym3_action(id, delta), delta) <= 1e-15);
  // diag(i, -i) fixes the configuration projectively
  GroupElement gamma{Cx(0, 1), Cx(0), Cx(0), Cx(0, -1)};
  CHECK(projective_distance(delta, sym3_action(gamma, delta)) <= 1e-12);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    GroupElement g = random_su2(rng), h = random_su2(rng);
    BinaryForm lhs = sym3_action(g, sym3_action(h, delta));
    BinaryForm rhs = sym3_action(mul(g, h), delta);
    CHECK(form_distance(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("axial disc boundaries") {
  for (DiscKind kind : {DiscKind::maslov2, DiscKind::maslov4}) {
    DiscSample d = axial_disc(kind, 1024);
    CHECK(d.boundary.size() == 1024);
    for (const auto& f : d.boundary) CHECK(moment_map(3, f).norm() <= 1e-9);
    // the loop is continuous and closes up projectively across the wrap
    double max_jump = 0;
    for (std::size_t j = 0; j < d.boundary.size(); ++j) {
      const BinaryForm& cur = d.boundary[j];
      const BinaryForm& nxt = d.boundary[(j + 1) % d.boundary.size()];
      max_jump = std::max(max_jump, projective_distance(cur, nxt));
    }
    CHECK(max_jump <= 0.1);
  }
  CHECK_THROWS(axial_disc(DiscKind::maslov2, 100));
}

TEST_CASE("winding numbers give the Maslov indices") {
  DiscSample d2 = axial_disc(DiscKind::maslov2, 1024);
  CHECK(maslov_via_winding(d2) == 2);
  DiscSample d4 = axial_disc(DiscKind::maslov4, 1024);
  CHECK(maslov_via_winding(d4) == 4);
  // indices are even and at least 2
  for (int m : {maslov_via_winding(d2), maslov_via_winding(d4)}) {
    CHECK(m % 2 == 0);
    CHECK(m >= 2);
  }
  // a constant loop has winding zero
  DiscSample constant;
  constant.kind = DiscKind::maslov2;
  BinaryForm delta = configuration("delta").to_double();
  for (int j = 0; j < 512; ++j) {
    constant.theta.push_back(2 * kPi * j / 512);
    constant.boundary.push_back(delta);
  }
  CHECK(maslov_via_winding(constant) == 0);
}

TEST_CASE("secant image of the order-two boundary loop is real") {
  DiscSample d4 = axial_disc(DiscKind::maslov4, 512);
  for (const auto& f : d4.boundary) {
    SecantImage img = secant_projection(f);
    REQUIRE_FALSE(img.indeterminate);
    std::size_t big = 0;
    for (std::size_t i = 1; i < 3; ++i)
      if (std::abs(img.w[i]) > std::abs(img.w[big])) big = i;
    Cx scale = std::abs(img.w[big]) / img.w[big];
    for (const Cx& z : img.w)
      CHECK(std::abs(std::imag(z * scale)) <= 1e-9 * std::abs(img.w[big]));
  }
}

TEST_CASE("torus-Chiang intersection circles") {
  IntersectionResult r = torus_chiang_intersection();
  REQUIRE(r.families.size() == 2);
  CHECK(r.max_residual <= 1e-10);
  CHECK(r.perturbed_count == 4);
  CHECK(std::abs(r.cos_theta1 + 1.0 / std::sqrt(3.0)) <= 1e-9);
  for (const auto& [t1, t3] : r.families) {
    CHECK(std::abs(std::cos(t1) + 1.0 / std::sqrt(3.0)) <= 1e-9);
    // theta_3 = -theta_1 mod 2 pi
    CHECK(std::abs(std::remainder(t1 + t3, 2 * kPi)) <= 1e-9);
  }
}

TEST_CASE("Maslov bookkeeping identities") {
  BookkeepingResult r1 = maslov_bookkeeping(Int(4), Int(1), Int(3));
  CHECK(r1.mu_tilde == 2);
  CHECK(r1.eq2_value == Rat(4));
  CHECK_FALSE(r1.consistent);
  BookkeepingResult r2 = maslov_bookkeeping(Int(4), Int(1), Int(0));
  CHECK(r2.mu_tilde == 2);
  CHECK(r2.eq2_value == Rat(2));
  CHECK(r2.consistent);
  // the axial Maslov 2 disc lifting over a real line of index 3
  BookkeepingResult r3 = maslov_bookkeeping(Int(2), Int(0), Int(3));
  CHECK(r3.mu_tilde == 2);
  CHECK(r3.eq2_value == Rat(2));
  CHECK(r3.consistent);
}

TEST_CASE("case (b) system is inconsistent") {
  CaseBResult r = case_b_contradiction();
  CHECK(r.inconsistent);
  CHECK(r.rank_coeff == 3);
  CHECK(r.rank_augmented == 4);
  REQUIRE(r.certificate.size() == 4);
}
