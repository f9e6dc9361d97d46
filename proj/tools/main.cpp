#include "pearllab/clifford.hpp"
#include "pearllab/geom.hpp"
#include "pearllab/pearl.hpp"
#include "pearllab/quantum.hpp"
#include "pearllab/report.hpp"
#include "pearllab/rh.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pearllab;

struct Settings {
  GeomConfig geom;
  std::size_t samples = 1024;
  std::uint64_t seed = 0;
};

void load_config_file(const std::string& path, Settings& st) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      auto e = s.find_last_not_of(" \t\r");
      s.erase(e == std::string::npos ? 0 : e + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) continue;
    if (key == "samples") st.samples = std::stoull(val);
    else if (key == "seed") st.seed = std::stoull(val);
    else if (key == "lagrangian_tol") st.geom.lagrangian_tol = std::stod(val);
    else if (key == "winding_tol") st.geom.winding_tol = std::stod(val);
    else if (key == "residual_tol") st.geom.residual_tol = std::stod(val);
    else throw CLI::ValidationError("--config", "unknown key: " + key);
  }
}

SignChoice parse_signs(const std::string& s) {
  std::stringstream ss(s);
  std::string tok;
  std::vector<int> vals;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
  if (vals.size() != 3) throw CLI::ValidationError("--signs", "need three comma-separated signs");
  SignChoice sc{vals[0], vals[1], vals[2]};
  sc.validate();
  return sc;
}

std::string zh_str(const ZHomology& h) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < h.free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const Int& t : h.torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string poly_str(const std::vector<Int>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Int a = c[k] < 0 ? Int(-c[k]) : c[k];
    if (first) {
      if (c[k] < 0) os << "-";
    } else {
      os << (c[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "lambda";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

BilinearForm load_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--form", "cannot open " + path);
  std::uint64_t p;
  std::size_t n;
  if (!(in >> p >> n)) throw CLI::ValidationError("--form", "expected: p n then n*n entries");
  BilinearForm f;
  f.p = p;
  f.n = n;
  f.b = IMat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long e;
      if (!(in >> e)) throw CLI::ValidationError("--form", "too few matrix entries");
      f.b.at(i, j) = mod_p(Int(e), p);
    }
  f.validate();
  return f;
}

int run_clifford_suite(const BilinearForm& form, std::uint64_t zeta) {
  bool ok = true;
  auto c = center(form);
  auto sc = supercenter(form);
  std::cout << "center dim " << c.dim() << " (" << c.even_dim << " even, " << c.odd_dim
            << " odd)\n";
  std::cout << "supercenter dim " << sc.dim() << "\n";
  ok = ok && c.dim() == 2 && c.odd_dim == 1 && sc.dim() == 1;
  auto [z, zsq] = central_odd_element(form);
  std::cout << "z^2 = " << zsq << " (square class of zeta^3: "
            << (same_square_class(zsq, zeta * zeta % form.p * zeta % form.p, form.p) ? "yes"
                                                                                     : "no")
            << ")\n";
  ok = ok && same_square_class(zsq, zeta * zeta % form.p * zeta % form.p, form.p);
  auto es = even_split(form);
  std::cout << "Cl^0 simple module dim " << es.module_dim << "\n";
  ok = ok && es.module_dim == 2;
  auto spin = induce_graded_spin(form);
  auto [h0, h1] = graded_hom(spin, spin);
  std::cout << "graded spin module rank " << spin.dim << ", Hom dims (" << h0 << "," << h1
            << ")\n";
  ok = ok && spin.dim == 4 && h0 == 1 && h1 == 1;
  std::uint64_t ext = ext_presentation(form);
  std::cout << "Ext ring F[x]/(x^2 - " << ext << ")\n";
  ok = ok && ext != 0;
  auto hh = hochschild_low(form);
  std::cout << "(HH^0, HH^1) = (" << hh.first << ", " << hh.second << ")\n";
  ok = ok && hh.first == 1 && hh.second == 0;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for the Chiang Lagrangian computations"};
  app.require_subcommand(1);
  Settings st;
  if (const char* env = std::getenv("PEARLLAB_SEED")) st.seed = std::strtoull(env, nullptr, 10);
  std::string config_path;
  app.add_option("--config-file", config_path, "key=value settings file");

  // hf
  auto* hf = app.add_subcommand("hf", "Floer cohomology of the pearl complex");
  std::string hf_signs = "1,1,1";
  std::uint64_t hf_zeta = 1, hf_char = 0;
  hf->add_option("--signs", hf_signs, "X,Y,Z in {1,-1}");
  hf->add_option("--zeta", hf_zeta, "monodromy representative");
  hf->add_option("--char", hf_char, "coefficient characteristic (0 = Z)");

  // morse
  auto* morse = app.add_subcommand("morse", "Morse complex of the orbit");

  // qh
  auto* qh = app.add_subcommand("qh", "quantum cohomology presentation");
  std::string qh_config = "delta";
  std::uint64_t qh_char = 0;
  qh->add_option("--config", qh_config, "delta|T|O|I");
  qh->add_option("--char", qh_char, "prime for the spectrum");

  // m0-test
  auto* m0t = app.add_subcommand("m0-test", "eigenvalue test for an obstruction value");
  long long m0_value = 0;
  std::string m0_config = "delta";
  std::uint64_t m0_char = 5;
  m0t->add_option("--value", m0_value, "candidate eigenvalue")->required();
  m0t->add_option("--config", m0_config, "delta|T|O|I");
  m0t->add_option("--char", m0_char, "prime");

  // clifford
  auto* cl = app.add_subcommand("clifford", "Clifford algebra suite");
  std::uint64_t cl_zeta = 1;
  std::string cl_form;
  cl->add_option("--zeta", cl_zeta, "monodromy representative in [1,4]");
  cl->add_option("--form", cl_form, "file with: p n then n*n matrix entries");

  // disc
  auto* disc = app.add_subcommand("disc", "axial disc Maslov index via winding");
  std::string disc_kind = "maslov2";
  std::size_t disc_samples = 1024;
  disc->add_option("--kind", disc_kind, "maslov2|maslov4")
      ->check(CLI::IsMember({"maslov2", "maslov4"}));
  disc->add_option("--samples", disc_samples, "boundary sample count (>= 256)");

  // intersect
  auto* intersect = app.add_subcommand("intersect", "torus-Chiang intersection circles");

  // rh
  auto* rh = app.add_subcommand("rh", "Riemann-Hilbert index calculus");
  std::string rh_kappa;
  rh->add_option("--kappa", rh_kappa, "comma-separated partial indices")->required();

  // caseb
  auto* caseb = app.add_subcommand("caseb", "case (b) linear system certificate");

  // verify-all
  auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, st);

    if (hf->parsed()) {
      SignChoice sc = parse_signs(hf_signs);
      if (hf_char == 0) {
        auto [h0, h1] = floer_cohomology_Z(sc);
        std::cout << "HF^0 = " << zh_str(h0) << ", HF^1 = " << zh_str(h1) << "\n";
      } else {
        auto [r0, r1] = floer_cohomology_mod_p(sc, hf_zeta, hf_char);
        std::cout << "rank HF^0 = " << r0 << ", rank HF^1 = " << r1 << " over F_" << hf_char
                  << "\n";
      }
      std::cout << "|det d_F| = " << boost::multiprecision::abs(chiang_determinant(sc, hf_zeta))
                << "\n";
      return 0;
    }
    if (morse->parsed()) {
      IMat m = morse_matrix();
      auto snf = smith_normal_form(m);
      std::cout << "Morse matrix rows (dx_i'):\n";
      for (std::size_t i = 0; i < 3; ++i)
        std::cout << "  " << m.at(i, 0) << " " << m.at(i, 1) << " " << m.at(i, 2) << "\n";
      std::cout << "Smith normal form diag(" << snf.D.at(0, 0) << ", " << snf.D.at(1, 1) << ", "
                << snf.D.at(2, 2) << ")\n";
      auto [he, ho] = homology_over_Z(morse_only_complex());
      std::cout << "H_even = " << zh_str(he) << ", H_odd = " << zh_str(ho) << "\n";
      return 0;
    }
    if (qh->parsed()) {
      auto pres = presentation_by_name(qh_config);
      auto chi = char_poly(c1_matrix(pres));
      std::cout << "char poly: " << poly_str(chi) << "\n";
      if (qh_char != 0) {
        auto spec = spectrum_mod_p(pres, qh_char);
        std::cout << "spectrum mod " << qh_char << ": {";
        bool first = true;
        for (auto r : spec) {
          std::cout << (first ? "" : ",") << r;
          first = false;
        }
        std::cout << "}\n";
      }
      return 0;
    }
    if (m0t->parsed()) {
      bool ok = eigenvalue_test(Int(m0_value), presentation_by_name(m0_config), m0_char);
      std::cout << m0_value << (ok ? " is" : " is not") << " an eigenvalue of c_1* mod "
                << m0_char << "\n";
      return ok ? 0 : 1;
    }
    if (cl->parsed()) {
      BilinearForm form = cl_form.empty() ? torus_form(cl_zeta) : load_form_file(cl_form);
      return run_clifford_suite(form, cl_zeta);
    }
    if (disc->parsed()) {
      DiscKind kind = disc_kind == "maslov2" ? DiscKind::maslov2 : DiscKind::maslov4;
      auto d = axial_disc(kind, disc_samples, st.geom);
      int mi = maslov_via_winding(d, st.geom);
      std::cout << "Maslov index " << mi << " from " << disc_samples << " boundary samples\n";
      int want = kind == DiscKind::maslov2 ? 2 : 4;
      return mi == want ? 0 : 1;
    }
    if (intersect->parsed()) {
      auto r = torus_chiang_intersection(st.geom);
      std::cout << r.families.size() << " circle families; cos(theta_1) = " << r.cos_theta1
                << "; perturbed intersection count " << r.perturbed_count << "\n";
      return (r.families.size() == 2 && r.perturbed_count == 4) ? 0 : 1;
    }
    if (rh->parsed()) {
      std::stringstream ss(rh_kappa);
      std::string tok;
      std::vector<long> kappa;
      while (std::getline(ss, tok, ',')) kappa.push_back(std::stol(tok));
      auto d = oh_dimensions(kappa);
      std::cout << "ker " << d.ker << ", coker " << d.coker << ", index " << d.index
                << (is_regular(kappa) ? ", regular" : ", not regular")
                << (is_nonneg(kappa) ? ", nonnegative" : "") << "\n";
      return 0;
    }
    if (caseb->parsed()) {
      auto r = case_b_contradiction();
      std::cout << "rank(A) = " << r.rank_coeff << ", rank(A|b) = " << r.rank_augmented
                << (r.inconsistent ? ": inconsistent" : ": consistent") << "\n";
      std::cout << "certificate y = (1,-2,-1,-1): y^T A = 0, y^T b != 0\n";
      return r.inconsistent ? 0 : 1;
    }
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.disc_samples = st.samples;
      auto records = run_all_checks(opts);
      std::cout << (verify_json ? report_to_json(records) : report_to_table(records));
      return any_failed(records) ? 1 : 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
