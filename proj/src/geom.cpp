#include "pearllab/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pearllab {

namespace {

constexpr double kPi = std::numbers::pi;

double binom(int n, int k) {
  Int b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b.convert_to<double>();
}

double quad_to_double(const QuadRat& q) {
  return q.r.convert_to<double>() + std::sqrt(3.0) * q.s.convert_to<double>();
}

}  // namespace

Cx ExactComplex::to_double() const {
  return Cx(quad_to_double(re), quad_to_double(im));
}

void BinaryForm::validate() const {
  if (static_cast<int>(v.size()) != n + 1)
    throw std::invalid_argument("binary form needs n+1 coefficients");
  for (const Cx& z : v)
    if (z != Cx(0)) return;
  throw std::invalid_argument("binary form must be nonzero");
}

BinaryForm ExactBinaryForm::to_double() const {
  BinaryForm f;
  f.n = n;
  for (const auto& z : v) f.v.push_back(z.to_double());
  return f;
}

ExactBinaryForm configuration(const std::string& name) {
  auto rat = [](long r) { return ExactComplex{{Rat(r), Rat(0)}, {Rat(0), Rat(0)}}; };
  auto i_sqrt3 = [](long c) { return ExactComplex{{Rat(0), Rat(0)}, {Rat(0), Rat(c)}}; };
  ExactBinaryForm f;
  if (name == "delta") {
    f.n = 3;
    f.v = {rat(1), rat(0), rat(3), rat(0)};
  } else if (name == "T") {
    f.n = 4;
    f.v = {rat(1), rat(0), i_sqrt3(2), rat(0), rat(1)};
  } else if (name == "O") {
    f.n = 6;
    f.v = {rat(0), rat(1), rat(0), rat(0), rat(0), rat(1), rat(0)};
  } else if (name == "I") {
    f.n = 12;
    f.v = {rat(0), rat(1), rat(0), rat(0),  rat(0), rat(0), rat(11),
           rat(0), rat(0), rat(0), rat(0), rat(-1), rat(0)};
  } else {
    throw std::invalid_argument("unknown configuration: " + name);
  }
  return f;
}

double MomentValue::norm() const {
  double s = 0;
  for (const Cx& z : m) s += std::norm(z);
  return std::sqrt(s);
}

MomentValue moment_map(int n, const BinaryForm& form) {
  form.validate();
  std::vector<Cx> u(form.v.size());
  for (int k = 0; k <= n; ++k) u[k] = form.v[k] / std::sqrt(binom(n, k));
  double diag = 0;
  for (int k = 0; k <= n; ++k) diag += (n - 2 * k) * std::norm(u[k]);
  Cx off(0);
  for (int k = 0; k < n; ++k)
    off += std::sqrt(double((k + 1) * (n - k))) * u[k] * std::conj(u[k + 1]);
  MomentValue mv;
  const Cx i(0, 1);
  mv.m[0] = i * diag;
  mv.m[1] = 2.0 * i * off;
  mv.m[2] = 2.0 * i * std::conj(off);
  mv.m[3] = -i * diag;
  return mv;
}

bool adjacent_products_vanish(const ExactBinaryForm& form) {
  for (std::size_t k = 0; k + 1 < form.v.size(); ++k)
    if (!(form.v[k] * form.v[k + 1].conj()).is_zero()) return false;
  return true;
}

QuadRat exact_moment_diagonal(const ExactBinaryForm& form) {
  if (!adjacent_products_vanish(form))
    throw std::invalid_argument("off-diagonal terms do not vanish exactly");
  QuadRat diag;
  for (int k = 0; k <= form.n; ++k) {
    Int b = 1;
    for (int i = 0; i < k; ++i) {
      b *= (form.n - i);
      b /= (i + 1);
    }
    QuadRat nsq = form.v[k].norm_sq();
    Rat scale = Rat(form.n - 2 * k) / Rat(b);
    diag = diag + QuadRat{nsq.r * scale, nsq.s * scale};
  }
  return diag;
}

bool verify_lagrangian_orbit(const std::string& name) {
  ExactBinaryForm f = configuration(name);
  return adjacent_products_vanish(f) && exact_moment_diagonal(f).is_zero();
}

Cx discriminant_cubic(const BinaryForm& form) {
  if (form.n != 3 || form.v.size() != 4)
    throw std::invalid_argument("cubic form required");
  const Cx &a = form.v[0], &b = form.v[1], &c = form.v[2], &d = form.v[3];
  return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * a * c * c * c -
         27.0 * a * a * d * d;
}

SecantImage secant_projection(const BinaryForm& form) {
  if (form.v.size() != 4) throw std::invalid_argument("cubic form required");
  const Cx &u0 = form.v[0], &u1 = form.v[1], &u2 = form.v[2], &u3 = form.v[3];
  SecantImage s;
  s.w = {u0 * u2 - u1 * u1, u0 * u3 - u1 * u2, u1 * u3 - u2 * u2};
  double mag = 0;
  for (const Cx& z : s.w) mag = std::max(mag, std::abs(z));
  double in = 0;
  for (const Cx& z : form.v) in = std::max(in, std::abs(z));
  s.indeterminate = mag <= 1e-12 * in * in;
  return s;
}

BinaryForm sym3_action(const GroupElement& g, const BinaryForm& form) {
  int n = form.n;
  // x -> a x + c y, y -> b x + d y
  BinaryForm out;
  out.n = n;
  out.v.assign(n + 1, Cx(0));
  std::vector<Cx> pa(n + 1), pb(n + 1), pc(n + 1), pd(n + 1);
  pa[0] = pb[0] = pc[0] = pd[0] = Cx(1);
  for (int i = 1; i <= n; ++i) {
    pa[i] = pa[i - 1] * g.a;
    pb[i] = pb[i - 1] * g.b;
    pc[i] = pc[i - 1] * g.c;
    pd[i] = pd[i - 1] * g.d;
  }
  for (int k = 0; k <= n; ++k) {
    if (form.v[k] == Cx(0)) continue;
    // v_k x^(n-k) y^k -> v_k (a x + c y)^(n-k) (b x + d y)^k
    std::vector<Cx> first(n - k + 1), second(k + 1);
    for (int i = 0; i <= n - k; ++i) first[i] = binom(n - k, i) * pa[n - k - i] * pc[i];
    for (int j = 0; j <= k; ++j) second[j] = binom(k, j) * pb[k - j] * pd[j];
    for (int i = 0; i <= n - k; ++i)
      for (int j = 0; j <= k; ++j) out.v[i + j] += form.v[k] * first[i] * second[j];
  }
  return out;
}

DiscSample axial_disc(DiscKind kind, std::size_t samples, const GeomConfig& cfg) {
  if (samples < 256) throw std::invalid_argument("at least 256 samples required");
  BinaryForm base;  // x^3 - y^3, the rotated representative of the orbit
  base.n = 3;
  base.v = {Cx(1), Cx(0), Cx(0), Cx(-1)};
  DiscSample d;
  d.kind = kind;
  const Cx i(0, 1);
  for (std::size_t j = 0; j < samples; ++j) {
    double th = 2 * kPi * double(j) / double(samples);
    GroupElement g;
    Cx lift;
    if (kind == DiscKind::maslov2) {
      double c = std::cos(th / 4), s = std::sin(th / 4);
      g = {Cx(c), -i * s, -i * s, Cx(c)};
      lift = std::exp(i * (th / 4));
    } else {
      g = {std::exp(i * (th / 6)), Cx(0), Cx(0), std::exp(-i * (th / 6))};
      lift = std::exp(i * (th / 2));
    }
    BinaryForm u = sym3_action(g, base);
    for (Cx& z : u.v) z *= lift;
    double mn = moment_map(3, u).norm();
    if (mn > cfg.lagrangian_tol)
      throw std::runtime_error("axial disc boundary leaves the Lagrangian orbit");
    d.theta.push_back(th);
    d.boundary.push_back(u);
  }
  return d;
}

int maslov_via_winding(const DiscSample& d, const GeomConfig& cfg) {
  std::size_t n = d.boundary.size();
  if (n < 2) throw std::invalid_argument("too few samples");
  std::vector<Cx> w(n);
  double peak = 0;
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = discriminant_cubic(d.boundary[j]);
    peak = std::max(peak, std::abs(w[j]));
  }
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(w[j]) <= 1e-9 * peak)
      throw std::runtime_error("boundary discriminant vanishes");
  double total = 0;
  for (std::size_t j = 0; j < n; ++j) total += std::arg(w[(j + 1) % n] / w[j]);
  double winding = total / (2 * kPi);
  double rounded = std::round(winding);
  if (std::abs(winding - rounded) > cfg.winding_tol)
    throw std::runtime_error("non-integral winding: undersampled loop");
  return 2 * static_cast<int>(rounded);
}

IntersectionResult torus_chiang_intersection(const GeomConfig& cfg) {
  const double s3 = std::sqrt(3.0);
  auto f1 = [&](double t1, double t3) { return s3 * std::cos(t1) + 2 + s3 * std::cos(t3); };
  auto f2 = [&](double t1, double t3) { return s3 * std::sin(t1) + s3 * std::sin(t3); };
  auto wrap = [](double t) {
    t = std::fmod(t, 2 * kPi);
    if (t < 0) t += 2 * kPi;
    return t;
  };
  IntersectionResult res;
  const int grid = 24;
  for (int gi = 0; gi < grid; ++gi)
    for (int gj = 0; gj < grid; ++gj) {
      double t1 = 2 * kPi * (gi + 0.5) / grid;
      double t3 = 2 * kPi * (gj + 0.5) / grid;
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        double a = f1(t1, t3), b = f2(t1, t3);
        if (std::abs(a) + std::abs(b) < 1e-14) {
          ok = true;
          break;
        }
        double j11 = -s3 * std::sin(t1), j12 = -s3 * std::sin(t3);
        double j21 = s3 * std::cos(t1), j22 = s3 * std::cos(t3);
        double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-12) break;
        t1 -= (j22 * a - j12 * b) / det;
        t3 -= (-j21 * a + j11 * b) / det;
      }
      if (!ok) continue;
      t1 = wrap(t1);
      t3 = wrap(t3);
      bool dup = false;
      for (auto& fam : res.families) {
        double d1 = std::abs(wrap(fam.first - t1 + kPi) - kPi);
        double d3 = std::abs(wrap(fam.second - t3 + kPi) - kPi);
        if (d1 < 1e-6 && d3 < 1e-6) dup = true;
      }
      if (!dup) res.families.emplace_back(t1, t3);
    }
  std::sort(res.families.begin(), res.families.end());
  for (auto& fam : res.families) {
    double r = std::hypot(f1(fam.first, fam.second), f2(fam.first, fam.second));
    res.max_residual = std::max(res.max_residual, r);
  }
  if (res.max_residual > cfg.residual_tol)
    throw std::runtime_error("intersection residual too large");
  res.perturbed_count = 2 * static_cast<int>(res.families.size());
  if (!res.families.empty()) res.cos_theta1 = std::cos(res.families.front().first);
  return res;
}

BookkeepingResult maslov_bookkeeping(const Int& mu_u, const Int& dot_e, const Int& mu_proj) {
  BookkeepingResult r;
  r.mu_tilde = mu_u - 2 * dot_e;
  r.eq2_value = Rat(2 * dot_e) + Rat(2, 3) * Rat(mu_proj);
  r.consistent = Rat(r.mu_tilde) == r.eq2_value;
  return r;
}

CaseBResult case_b_contradiction() {
  IMat a(4, 4, {Int(4), Int(4), Int(1), Int(2),  //
                Int(2), Int(1), Int(0), Int(1),  //
                Int(0), Int(1), Int(1), Int(0),  //
                Int(0), Int(1), Int(0), Int(0)});
  std::vector<Int> b = {Int(0), Int(0), Int(1), Int(1)};
  IMat aug(4, 5);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, 4) = b[i];
  }
  CaseBResult r;
  r.rank_coeff = smith_normal_form(a).rank;
  r.rank_augmented = smith_normal_form(aug).rank;
  r.inconsistent = r.rank_augmented > r.rank_coeff;
  r.certificate = {Int(1), Int(-2), Int(-1), Int(-1)};
  for (std::size_t j = 0; j < 4; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += r.certificate[i] * a.at(i, j);
    if (s != 0) throw std::logic_error("certificate does not annihilate the system");
  }
  Int sb = 0;
  for (std::size_t i = 0; i < 4; ++i) sb += r.certificate[i] * b[i];
  if (sb == 0) throw std::logic_error("certificate does not witness inconsistency");
  return r;
}

}  // namespace pearllab
