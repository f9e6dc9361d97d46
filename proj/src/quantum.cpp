#include "pearllab/quantum.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pearllab {

namespace {

void add_term(HEPoly& p, int a, int b, const Int& c) {
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  auto it = p.find(key);
  if (it == p.end()) {
    p.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

HEPoly combine(const HEPoly& a, const HEPoly& b) {
  HEPoly out = a;
  for (const auto& [k, c] : b) add_term(out, k.first, k.second, c);
  return out;
}

HEPoly scale(const HEPoly& p, const Int& s) {
  HEPoly out;
  for (const auto& [k, c] : p) add_term(out, k.first, k.second, c * s);
  return out;
}

HEPoly shift(const HEPoly& p, int da, int db) {
  HEPoly out;
  for (const auto& [k, c] : p) add_term(out, k.first + da, k.second + db, c);
  return out;
}

}  // namespace

HEPoly parse_he_poly(const std::string& text) {
  HEPoly out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty polynomial");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in polynomial");
    }
    first = false;
    skip_ws();
    bool saw_digits = false;
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      saw_digits = true;
    }
    Int coeff = saw_digits ? Int(digits) : Int(1);
    int a = 0, b = 0;
    bool saw_var = false;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i < text.size() && (text[i] == 'H' || text[i] == 'E')) {
        char v = text[i++];
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::string exp;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) exp += text[i++];
          if (exp.empty()) throw std::invalid_argument("missing exponent");
          e = std::stoi(exp);
        }
        (v == 'H' ? a : b) += e;
        saw_var = true;
      } else {
        break;
      }
    }
    if (!saw_digits && !saw_var) throw std::invalid_argument("malformed polynomial term");
    add_term(out, a, b, coeff * sign);
    skip_ws();
  }
  return out;
}

std::string he_poly_to_string(const HEPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest H-degree first, then highest E-degree.
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto& [key, c] = *it;
    Int ac = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    if (key.first == 1) mono += "H";
    else if (key.first > 1) mono += "H^" + std::to_string(key.first);
    if (key.second == 1) mono += (mono.empty() ? "" : "*") + std::string("E");
    else if (key.second > 1) mono += (mono.empty() ? "" : "*") + ("E^" + std::to_string(key.second));
    if (mono.empty()) {
      os << ac;
    } else {
      if (ac != 1) os << ac << "*";
      os << mono;
    }
  }
  return os.str();
}

void QHPresentation::validate() const {
  for (const auto& [key, c] : r) {
    (void)c;
    if (key.first + key.second > 1)
      throw std::invalid_argument("H^2 rewrite target must have total degree <= 1");
  }
  for (const auto& [key, c] : q) {
    (void)c;
    if (key.first + key.second > 1)
      throw std::invalid_argument("E^2 rewrite target must have total degree <= 1");
  }
}

QHPresentation presentation_by_name(const std::string& name) {
  QHPresentation p;
  p.name = name;
  if (name == "delta") {
    p.k = 1;
    p.r = {};
    p.q = parse_he_poly("1");
    p.ell = 4;
  } else if (name == "T") {
    p.k = 2;
    p.r = {};
    p.q = parse_he_poly("H");
    p.ell = 3;
  } else if (name == "O") {
    p.k = 5;
    p.r = parse_he_poly("3");
    p.q = parse_he_poly("E+1");
    p.ell = 2;
  } else if (name == "I") {
    p.k = 22;
    p.r = parse_he_poly("2H+24");
    p.q = parse_he_poly("2E+H+4");
    p.ell = 1;
  } else {
    throw std::invalid_argument("unknown presentation: " + name);
  }
  p.validate();
  return p;
}

QHElement normal_form(const HEPoly& p, const QHPresentation& pres) {
  pres.validate();
  HEPoly work = p;
  for (;;) {
    // Find a monomial outside the reduced basis (1, H, E, HE).
    auto it = work.begin();
    for (; it != work.end(); ++it)
      if (it->first.first > 1 || it->first.second > 1) break;
    if (it == work.end()) break;
    auto [a, b] = it->first;
    Int c = it->second;
    work.erase(it);
    if (a > 1) {
      // H^a E^b -> H^(a-2) E^b (kE + R)
      HEPoly repl;
      add_term(repl, 0, 1, pres.k);
      repl = combine(repl, pres.r);
      work = combine(work, scale(shift(repl, a - 2, b), c));
    } else {
      // H^a E^b -> H^a E^(b-2) Q
      work = combine(work, scale(shift(pres.q, a, b - 2), c));
    }
  }
  QHElement out;
  for (const auto& [key, c] : work) {
    int idx = key.first + 2 * key.second;  // (0,0)->0 (1,0)->1 (0,1)->2 (1,1)->3
    out.c[static_cast<size_t>(idx)] = c;
  }
  return out;
}

HEPoly to_poly(const QHElement& e) {
  HEPoly p;
  add_term(p, 0, 0, e.c[0]);
  add_term(p, 1, 0, e.c[1]);
  add_term(p, 0, 1, e.c[2]);
  add_term(p, 1, 1, e.c[3]);
  return p;
}

QHElement multiply(const QHElement& a, const QHElement& b, const QHPresentation& pres) {
  HEPoly pa = to_poly(a), pb = to_poly(b), prod;
  for (const auto& [ka, ca] : pa)
    for (const auto& [kb, cb] : pb)
      add_term(prod, ka.first + kb.first, ka.second + kb.second, ca * cb);
  return normal_form(prod, pres);
}

IMat c1_matrix(const QHPresentation& pres) {
  static const std::array<std::pair<int, int>, 4> basis = {
      std::make_pair(0, 0), std::make_pair(1, 0), std::make_pair(0, 1), std::make_pair(1, 1)};
  IMat m(4, 4);
  for (size_t j = 0; j < 4; ++j) {
    HEPoly p;
    add_term(p, basis[j].first + 1, basis[j].second, pres.ell);
    QHElement img = normal_form(p, pres);
    for (size_t i = 0; i < 4; ++i) m.at(i, j) = img.c[i];
  }
  return m;
}

bool eigenvalue_test(const Int& m0, const QHPresentation& pres, std::uint64_t p) {
  auto chi = char_poly(c1_matrix(pres));
  return mod_p(eval_poly(chi, m0), p) == 0;
}

std::set<std::uint64_t> spectrum_mod_p(const QHPresentation& pres, std::uint64_t p) {
  return roots_mod_p(char_poly(c1_matrix(pres)), p);
}

}  // namespace pearllab
