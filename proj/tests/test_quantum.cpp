#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pearllab/quantum.hpp"

#include <random>

using namespace pearllab;

namespace {

QHElement random_element(std::mt19937& rng) {
  QHElement e;
  std::uniform_int_distribution<int> dist(-9, 9);
  for (auto& c : e.c) c = dist(rng);
  return e;
}

const std::vector<std::string> kNames = {"delta", "T", "O", "I"};

}  // namespace

TEST_CASE("polynomial parsing round trip") {
  CHECK(he_poly_to_string(parse_he_poly("2H+24")) == "2*H + 24");
  CHECK(he_poly_to_string(parse_he_poly("2E + H + 4")) == "H + 2*E + 4");
  CHECK(he_poly_to_string(parse_he_poly("0")) == "0");
  CHECK(he_poly_to_string(parse_he_poly("H^2*E - E")) == "H^2*E - E");
  CHECK(parse_he_poly("H + H") == parse_he_poly("2H"));
  CHECK(parse_he_poly("H - H").empty());
  CHECK_THROWS(parse_he_poly(""));
  CHECK_THROWS(parse_he_poly("H +"));
  CHECK_THROWS(parse_he_poly("x"));
}

TEST_CASE("normal form rewrites into the fixed basis") {
  auto delta = presentation_by_name("delta");
  // H^2 = E, E^2 = 1
  QHElement h2 = normal_form(parse_he_poly("H^2"), delta);
  CHECK(h2.c == std::array<Int, 4>{Int(0), Int(0), Int(1), Int(0)});
  QHElement e2 = normal_form(parse_he_poly("E^2"), delta);
  CHECK(e2.c == std::array<Int, 4>{Int(1), Int(0), Int(0), Int(0)});
  QHElement h4 = normal_form(parse_he_poly("H^4"), delta);
  CHECK(h4.c == std::array<Int, 4>{Int(1), Int(0), Int(0), Int(0)});
  auto O = presentation_by_name("O");
  // H^2 = 5E + 3
  QHElement oh2 = normal_form(parse_he_poly("H^2"), O);
  CHECK(oh2.c == std::array<Int, 4>{Int(3), Int(0), Int(5), Int(0)});
}

TEST_CASE("ring laws on random elements") {
  std::mt19937 rng(2024);
  for (const auto& name : kNames) {
    auto pres = presentation_by_name(name);
    for (int trial = 0; trial < 20; ++trial) {
      QHElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
      CHECK(multiply(a, b, pres) == multiply(b, a, pres));
      CHECK(multiply(multiply(a, b, pres), c, pres) == multiply(a, multiply(b, c, pres), pres));
      // distributivity
      QHElement bc;
      for (std::size_t i = 0; i < 4; ++i) bc.c[i] = b.c[i] + c.c[i];
      QHElement lhs = multiply(a, bc, pres);
      QHElement r1 = multiply(a, b, pres), r2 = multiply(a, c, pres);
      for (std::size_t i = 0; i < 4; ++i) CHECK(lhs.c[i] == r1.c[i] + r2.c[i]);
    }
  }
}

TEST_CASE("classical limit is nilpotent") {
  for (const auto& name : kNames) {
    QHPresentation pres = presentation_by_name(name);
    pres.r.clear();
    pres.q.clear();  // H^2 = kE, E^2 = 0
    IMat m = c1_matrix(pres);
    IMat p4 = m * m * m * m;
    CHECK(p4.is_zero());
  }
}

TEST_CASE("characteristic polynomials of quantum multiplication") {
  auto chi = [](const std::string& name) {
    return char_poly(c1_matrix(presentation_by_name(name)));
  };
  CHECK(chi("delta") == std::vector<Int>{Int(-256), Int(0), Int(0), Int(0), Int(1)});
  CHECK(chi("T") == std::vector<Int>{Int(0), Int(-108), Int(0), Int(0), Int(1)});
  CHECK(chi("O") == std::vector<Int>{Int(-16), Int(0), Int(-44), Int(0), Int(1)});
  CHECK(chi("I") == std::vector<Int>{Int(-304), Int(-300), Int(-88), Int(-4), Int(1)});
}

TEST_CASE("index symmetry of the coefficient pattern") {
  auto chi_d = char_poly(c1_matrix(presentation_by_name("delta")));
  CHECK(chi_d[1] == 0);
  CHECK(chi_d[2] == 0);
  CHECK(chi_d[3] == 0);  // only lambda^4 and constant survive (index 4)
  auto chi_t = char_poly(c1_matrix(presentation_by_name("T")));
  CHECK(chi_t[0] == 0);
  CHECK(chi_t[2] == 0);
  CHECK(chi_t[3] == 0);  // only lambda^4 and lambda survive (index 3)
  auto chi_o = char_poly(c1_matrix(presentation_by_name("O")));
  CHECK(chi_o[1] == 0);
  CHECK(chi_o[3] == 0);  // even polynomial (index 2)
}

TEST_CASE("eigenvalue gate at 3") {
  auto delta = presentation_by_name("delta");
  Int v = eval_poly(char_poly(c1_matrix(delta)), Int(3));
  CHECK(v == -175);
  CHECK(prime_divisors(v) == std::set<std::uint64_t>{5, 7});
  CHECK(eigenvalue_test(Int(3), delta, 5));
  CHECK(eigenvalue_test(Int(3), delta, 7));
  CHECK_FALSE(eigenvalue_test(Int(3), delta, 11));
}

TEST_CASE("spectra modulo small primes") {
  auto delta = presentation_by_name("delta");
  CHECK(spectrum_mod_p(delta, 5) == std::set<std::uint64_t>{1, 2, 3, 4});
  CHECK(spectrum_mod_p(delta, 3) == std::set<std::uint64_t>{1, 2});
  CHECK(spectrum_mod_p(delta, 2) == std::set<std::uint64_t>{0});
  CHECK(spectrum_mod_p(presentation_by_name("T"), 5) == std::set<std::uint64_t>{0, 2});
}

TEST_CASE("presentation table and validation") {
  CHECK_THROWS(presentation_by_name("X"));
  QHPresentation bad = presentation_by_name("delta");
  bad.q = parse_he_poly("H^2");  // rewriting would not terminate
  CHECK_THROWS(bad.validate());
}
