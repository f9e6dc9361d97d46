#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pearllab/pearl.hpp"

using namespace pearllab;

namespace {

const std::vector<SignChoice> kAllSigns = {
    {1, 1, 1},  {1, 1, -1},  {1, -1, 1},  {1, -1, -1},
    {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

TEST_CASE("Morse matrix and its Smith form") {
  IMat m = morse_matrix();
  IMat want(3, 3, {Int(1), Int(1), Int(2),  //
                   Int(2), Int(1), Int(1),  //
                   Int(1), Int(2), Int(1)});
  CHECK(m == want);
  auto snf = smith_normal_form(m);
  CHECK(snf.D.at(0, 0) == 1);
  CHECK(snf.D.at(1, 1) == 1);
  CHECK(snf.D.at(2, 2) == 4);
}

TEST_CASE("Morse-only cohomology of the orbit") {
  auto [he, ho] = homology_over_Z(morse_only_complex());
  CHECK(he.free_rank == 1);
  REQUIRE(he.torsion.size() == 1);
  CHECK(he.torsion[0] == 4);
  CHECK(ho.free_rank == 1);
  CHECK(ho.torsion.empty());
}

TEST_CASE("pearl differential squares to zero in all cases") {
  for (const auto& s : kAllSigns) {
    CHECK(verify_d_squared(build_chiang_complex(s)));
    for (std::uint64_t zeta = 1; zeta <= 4; ++zeta)
      CHECK(verify_d_squared_mod_p(build_chiang_complex(s, zeta), 5));
  }
}

TEST_CASE("determinant identity over the full scan") {
  auto rows = det_formula_scan();
  REQUIRE(rows.size() == 32);
  std::set<Int> values;
  for (const auto& r : rows) {
    CHECK(r.identity_holds);
    Int xy = Int(r.signs.x) * Int(r.signs.y);
    Int want = Int(r.zeta) * Int(r.zeta) * abs_int(Int(8) * r.signs.z - Int(3) * xy);
    CHECK(abs_int(r.det) == want);
    values.insert(abs_int(r.det));
    CHECK(r.hf_nonzero_mod5 == (mod_p(r.det, 5) == 0));
  }
  std::set<Int> want = {Int(5),  Int(11), Int(20), Int(44),
                        Int(45), Int(80), Int(99), Int(176)};
  CHECK(values == want);
}

TEST_CASE("Floer cohomology over Z when XY = Z") {
  for (const auto& s : kAllSigns) {
    if (s.x * s.y != s.z) continue;
    auto [h0, h1] = floer_cohomology_Z(s);
    CHECK(h0.free_rank == 0);
    REQUIRE(h0.torsion.size() == 1);
    CHECK(h0.torsion[0] == 5);
    CHECK(h1.free_rank == 0);
    CHECK(h1.torsion.empty());
  }
}

TEST_CASE("Floer cohomology vanishes when XY = -Z") {
  for (const auto& s : kAllSigns) {
    if (s.x * s.y != -s.z) continue;
    auto [h0, h1] = floer_cohomology_Z(s);
    // |det| = 11: homology is Z/11 in even degree, not Z/5
    REQUIRE(h0.torsion.size() == 1);
    CHECK(h0.torsion[0] == 11);
    auto [f0, f1] = floer_cohomology_mod_p(s, 1, 5);
    CHECK(f0 == 0);
    CHECK(f1 == 0);
  }
}

TEST_CASE("field ranks detect exactly the primes of the determinant") {
  for (const auto& s : kAllSigns)
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
      Int det = chiang_determinant(s);
      auto [f0, f1] = floer_cohomology_mod_p(s, 1, p);
      bool nonzero = f0 + f1 > 0;
      CHECK(nonzero == (mod_p(det, p) == 0));
      CHECK(f0 == f1);  // rank (1,1) or (0,0): Euler characteristic zero
    }
}

TEST_CASE("local system weights keep the rank at (1,1) over F_5") {
  for (const auto& s : kAllSigns) {
    if (s.x * s.y != s.z) continue;
    for (std::uint64_t zeta = 1; zeta <= 4; ++zeta) {
      auto [f0, f1] = floer_cohomology_mod_p(s, zeta, 5);
      CHECK(f0 == 1);
      CHECK(f1 == 1);
    }
  }
}

TEST_CASE("monodromy representative validation") {
  CHECK_THROWS(floer_cohomology_mod_p({1, 1, 1}, 3, 7));  // 3^4 != 1 mod 7
  CHECK_THROWS(build_chiang_complex({2, 1, 1}));
}

TEST_CASE("obstruction number") {
  CHECK(m0_chiang(1).residue() == 3);
  CHECK(m0_chiang(2).residue() == 1);
  CHECK(m0_chiang(3).residue() == 4);
  CHECK(m0_chiang(4).residue() == 2);
  std::set<std::uint64_t> hit;
  for (std::uint64_t z = 1; z <= 4; ++z) hit.insert(m0_chiang(z).residue());
  CHECK(hit == std::set<std::uint64_t>{1, 2, 3, 4});
}
