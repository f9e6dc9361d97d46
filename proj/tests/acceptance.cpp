// One pass/fail line per acceptance criterion; exit 0 iff all pass.

#include "pearllab/clifford.hpp"
#include "pearllab/geom.hpp"
#include "pearllab/pearl.hpp"
#include "pearllab/quantum.hpp"
#include "pearllab/report.hpp"
#include "pearllab/rh.hpp"

#include <cmath>
#include <functional>
#include <iostream>

using namespace pearllab;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool ok) {
  std::cout << "criterion " << number << " (" << name << "): " << (ok ? "pass" : "FAIL")
            << "\n";
  if (!ok) ++failures;
}

bool guarded(const std::function<bool()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    std::cout << "  error: " << e.what() << "\n";
    return false;
  }
}

const std::vector<SignChoice> kAllSigns = {
    {1, 1, 1},  {1, 1, -1},  {1, -1, 1},  {1, -1, -1},
    {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}};

std::uint64_t zeta_cubed(std::uint64_t zeta) { return zeta * zeta % 5 * zeta % 5; }

}  // namespace

int main() {
  criterion(1, "Morse homology", guarded([] {
    auto snf = smith_normal_form(morse_matrix());
    if (!(snf.D.at(0, 0) == 1 && snf.D.at(1, 1) == 1 && snf.D.at(2, 2) == 4)) return false;
    auto [he, ho] = homology_over_Z(morse_only_complex());
    return he.free_rank == 1 && he.torsion == std::vector<Int>{Int(4)} && ho.free_rank == 1 &&
           ho.torsion.empty();
  }));

  criterion(2, "Floer cohomology over Z", guarded([] {
    for (const auto& s : kAllSigns) {
      if (s.x * s.y != s.z) continue;
      auto [h0, h1] = floer_cohomology_Z(s);
      if (!(h0.free_rank == 0 && h0.torsion == std::vector<Int>{Int(5)} && h1.free_rank == 0 &&
            h1.torsion.empty()))
        return false;
    }
    return true;
  }));

  criterion(3, "determinant identity", guarded([] {
    auto rows = det_formula_scan();
    if (rows.size() != 32) return false;
    std::set<Int> values;
    for (const auto& r : rows) {
      if (!r.identity_holds) return false;
      values.insert(r.det < 0 ? Int(-r.det) : r.det);
    }
    return values == std::set<Int>{Int(5),  Int(11), Int(20), Int(44),
                                   Int(45), Int(80), Int(99), Int(176)};
  }));

  criterion(4, "field coefficients", guarded([] {
    for (const auto& s : kAllSigns) {
      if (s.x * s.y != s.z) continue;
      for (std::uint64_t zeta = 1; zeta <= 4; ++zeta) {
        auto [f0, f1] = floer_cohomology_mod_p(s, zeta, 5);
        if (!(f0 == 1 && f1 == 1)) return false;
      }
      for (std::uint64_t p : {2ull, 3ull, 7ull, 11ull}) {
        auto [f0, f1] = floer_cohomology_mod_p(s, 1, p);
        if (!(f0 == 0 && f1 == 0)) return false;
      }
    }
    return true;
  }));

  criterion(5, "eigenvalue gate", guarded([] {
    auto delta = presentation_by_name("delta");
    Int v = eval_poly(char_poly(c1_matrix(delta)), Int(3));
    return v == -175 && prime_divisors(v) == std::set<std::uint64_t>{5, 7} &&
           spectrum_mod_p(delta, 5) == std::set<std::uint64_t>{1, 2, 3, 4};
  }));

  criterion(6, "characteristic polynomials", guarded([] {
    auto chi = [](const std::string& n) { return char_poly(c1_matrix(presentation_by_name(n))); };
    if (chi("delta") != std::vector<Int>{Int(-256), Int(0), Int(0), Int(0), Int(1)}) return false;
    if (chi("T") != std::vector<Int>{Int(0), Int(-108), Int(0), Int(0), Int(1)}) return false;
    if (chi("I") != std::vector<Int>{Int(-304), Int(-300), Int(-88), Int(-4), Int(1)})
      return false;
    auto chi_o = chi("O");
    // computed value, reported as flagged against the printed table; it
    // must be even as forced by c_1 = 2H
    if (chi_o != std::vector<Int>{Int(-16), Int(0), Int(-44), Int(0), Int(1)}) return false;
    if (!(chi_o[1] == 0 && chi_o[3] == 0)) return false;
    for (const auto& r : run_all_checks())
      if (r.id == "13-charpoly-O" && r.status != "flagged") return false;
    return true;
  }));

  criterion(7, "moment map", guarded([] {
    for (const std::string& name : {"delta", "T", "O", "I"})
      if (!verify_lagrangian_orbit(name)) return false;
    BinaryForm perturbed;
    perturbed.n = 3;
    perturbed.v = {Cx(1), Cx(0), Cx(3), Cx(0.1)};
    return moment_map(3, perturbed).norm() > 1e-3;
  }));

  criterion(8, "axial discs", guarded([] {
    return maslov_via_winding(axial_disc(DiscKind::maslov2, 1024)) == 2 &&
           maslov_via_winding(axial_disc(DiscKind::maslov4, 1024)) == 4;
  }));

  criterion(9, "intersection circles", guarded([] {
    auto r = torus_chiang_intersection();
    return r.families.size() == 2 && r.max_residual <= 1e-10 && r.perturbed_count == 4;
  }));

  criterion(10, "Clifford suite", guarded([] {
    for (std::uint64_t zeta = 1; zeta <= 4; ++zeta) {
      BilinearForm f = torus_form(zeta);
      auto c = center(f);
      if (!(c.dim() == 2 && c.odd_dim == 1)) return false;
      if (supercenter(f).dim() != 1) return false;
      auto [z, zsq] = central_odd_element(f);
      if (!same_square_class(zsq, zeta_cubed(zeta), 5)) return false;
      if (even_split(f).module_dim != 2) return false;
      auto spin = induce_graded_spin(f);
      auto [h0, h1] = graded_hom(spin, spin);
      if (!(spin.dim == 4 && h0 == 1 && h1 == 1)) return false;
      std::uint64_t ext = ext_presentation(f);
      if (!(ext != 0 && same_square_class(ext, zeta_cubed(zeta), 5))) return false;
      auto hh = hochschild_low(f);
      if (!(hh.first == 1 && hh.second == 0)) return false;
    }
    return hochschild_low(zero_form(3)).first == 8;
  }));

  criterion(11, "Riemann-Hilbert calculus", guarded([] {
    for (long n = 1; n <= 4; ++n) {
      std::vector<long> kappa(n, -5);
      for (;;) {
        auto d = oh_dimensions(kappa);
        if (d.ker - d.coker != d.index) return false;
        long i = 0;
        while (i < n && kappa[i] == 5) kappa[i++] = -5;
        if (i == n) break;
        ++kappa[i];
      }
    }
    if (enumerate_cases(4, 3) !=
        std::vector<std::vector<long>>{{0, 0, 4}, {0, 1, 3}, {0, 2, 2}, {1, 1, 2}})
      return false;
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < 64; ++i)
      for (int j = 0; j < 64; ++j) {
        if (i == j) continue;
        if (std::abs(kappa1_evaluation(2 * pi * i / 64, 2 * pi * j / 64).det) <= 1e-12)
          return false;
      }
    return true;
  }));

  criterion(12, "case (b) inconsistency", guarded([] {
    auto r = case_b_contradiction();
    return r.inconsistent && r.rank_coeff == 3 && r.rank_augmented == 4;
  }));

  criterion(13, "deterministic report", guarded([] {
    std::string a = report_to_json(run_all_checks());
    std::string b = report_to_json(run_all_checks());
    return !a.empty() && a == b && !any_failed(run_all_checks());
  }));

  if (failures == 0) {
    std::cout << "all 13 criteria pass\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
