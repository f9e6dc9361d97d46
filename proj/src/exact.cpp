#include "pearllab/exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace pearllab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(Int value, std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  Int r = value % Int(p);
  if (r < 0) r += Int(p);
  v_ = r.convert_to<std::uint64_t>();
}

Fp Fp::operator+(const Fp& o) const {
  if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
  return Fp(Int(v_) + Int(o.v_), p_);
}

Fp Fp::operator-(const Fp& o) const {
  if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
  return Fp(Int(v_) - Int(o.v_), p_);
}

Fp Fp::operator*(const Fp& o) const {
  if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
  return Fp(Int(v_) * Int(o.v_), p_);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp acc(1, p_), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero");
  return pow(p_ - 2);
}

Int mod_p(const Int& x, std::uint64_t p) {
  Int r = x % Int(p);
  if (r < 0) r += Int(p);
  return r;
}

namespace {

void swap_rows(IMat& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IMat& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += c * row[b]
void add_row(IMat& m, std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}

void add_col(IMat& m, std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}

void negate_row(IMat& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SNFResult smith_normal_form(const IMat& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  SNFResult res;
  res.D = m;
  res.U = IMat::identity(nr);
  res.V = IMat::identity(nc);
  res.Vinv = IMat::identity(nc);
  IMat& D = res.D;

  const std::size_t steps = std::min(nr, nc);
  for (std::size_t t = 0; t < steps; ++t) {
    // find pivot: smallest nonzero |entry| in D[t.., t..], row-major ties
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        Int a = abs(D.at(i, j));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;

    for (;;) {
      if (pi != t) {
        swap_rows(D, t, pi);
        swap_rows(res.U, t, pi);
      }
      if (pj != t) {
        swap_cols(D, t, pj);
        swap_cols(res.V, t, pj);
        swap_rows(res.Vinv, t, pj);
      }
      // clear column t
      bool dirty = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);
        add_row(D, i, t, -q);
        add_row(res.U, i, t, -q);
        if (D.at(i, t) != 0) dirty = true;
      }
      // clear row t
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        add_col(D, j, t, -q);
        add_col(res.V, j, t, -q);
        add_row(res.Vinv, t, j, q);
        if (D.at(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        bool clean = true;
        for (std::size_t i = t + 1; i < nr && clean; ++i)
          if (D.at(i, t) != 0) clean = false;
        for (std::size_t j = t + 1; j < nc && clean; ++j)
          if (D.at(t, j) != 0) clean = false;
        if (clean) break;
      }
      // re-pick smallest remaining pivot in the cross, then repeat
      pi = t;
      pj = t;
      best = abs(D.at(t, t));
      for (std::size_t i = t + 1; i < nr; ++i) {
        Int a = abs(D.at(i, t));
        if (a != 0 && a < best) {
          best = a;
          pi = i;
          pj = t;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        Int a = abs(D.at(t, j));
        if (a != 0 && a < best) {
          best = a;
          pi = t;
          pj = j;
        }
      }
    }
  }

  // enforce divisibility chain d_t | d_{t+1}
  for (std::size_t t = 0; t + 1 < steps; ++t) {
    if (D.at(t, t) == 0) continue;
    for (std::size_t s = t + 1; s < steps; ++s) {
      if (D.at(s, s) == 0) continue;
      if (D.at(s, s) % D.at(t, t) == 0) continue;
      // fold d_s into column t and rediagonalize the 2x2 block
      add_col(D, t, s, 1);
      add_col(res.V, t, s, 1);
      add_row(res.Vinv, s, t, -1);
      // gcd steps on the (t,s) block
      for (;;) {
        if (D.at(s, t) == 0 && D.at(t, s) == 0 &&
            (D.at(s, s) == 0 || D.at(s, s) % D.at(t, t) == 0))
          break;
        if (D.at(s, t) != 0) {
          if (abs(D.at(s, t)) < abs(D.at(t, t))) {
            swap_rows(D, t, s);
            swap_rows(res.U, t, s);
          }
          Int q = D.at(s, t) / D.at(t, t);
          add_row(D, s, t, -q);
          add_row(res.U, s, t, -q);
          if (D.at(s, t) != 0) continue;
        }
        if (D.at(t, s) != 0) {
          if (abs(D.at(t, s)) < abs(D.at(t, t))) {
            swap_cols(D, t, s);
            swap_cols(res.V, t, s);
            swap_rows(res.Vinv, t, s);
          }
          Int q = D.at(t, s) / D.at(t, t);
          add_col(D, s, t, -q);
          add_col(res.V, s, t, -q);
          add_row(res.Vinv, t, s, q);
          if (D.at(t, s) != 0) continue;
        }
      }
    }
  }

  for (std::size_t t = 0; t < steps; ++t) {
    if (D.at(t, t) < 0) {
      negate_row(D, t);
      negate_row(res.U, t);
    }
    if (D.at(t, t) != 0) ++res.rank;
  }
  return res;
}

Int determinant(const IMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // fraction-free Bareiss
  IMat a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      swap_rows(a, k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::vector<Int> char_poly(const IMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IMat mk = IMat::identity(n);  // M_1 = I
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // M_k = A*M_{k-1} + c_{n-k+1} * I
      mk = m * mk;
      for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c[n - k + 1];
    }
    IMat am = m * mk;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
    c[n - k] = -tr / Int(k);  // exact
  }
  return c;
}

Int eval_poly(const std::vector<Int>& coeffs, const Int& x) {
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::set<std::uint64_t> roots_mod_p(const std::vector<Int>& coeffs, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  bool zero = true;
  for (const Int& c : coeffs)
    if (mod_p(c, p) != 0) {
      zero = false;
      break;
    }
  if (zero) throw std::domain_error("polynomial vanishes identically mod p");
  std::set<std::uint64_t> roots;
  for (std::uint64_t r = 0; r < p; ++r)
    if (mod_p(eval_poly(coeffs, Int(r)), p) == 0) roots.insert(r);
  return roots;
}

std::set<std::uint64_t> prime_divisors(const Int& n) {
  if (n == 0) throw std::domain_error("prime divisors of zero");
  Int m = abs(n);
  std::set<std::uint64_t> out;
  for (Int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.insert(d.convert_to<std::uint64_t>());
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.insert(m.convert_to<std::uint64_t>());
  return out;
}

namespace {

// reduced row echelon mod p; returns pivot columns
std::vector<std::size_t> rref_mod_p(IMat& a, std::uint64_t p) {
  const std::size_t nr = a.rows(), nc = a.cols();
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) a.at(i, j) = mod_p(a.at(i, j), p);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a.at(piv, c) == 0) ++piv;
    if (piv == nr) continue;
    swap_rows(a, r, piv);
    Int inv = Int(Fp(a.at(r, c), p).inverse().residue());
    for (std::size_t j = c; j < nc; ++j) a.at(r, j) = mod_p(a.at(r, j) * inv, p);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Int f = a.at(i, c);
      for (std::size_t j = c; j < nc; ++j)
        a.at(i, j) = mod_p(a.at(i, j) - f * a.at(r, j), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(const IMat& m, std::uint64_t p) {
  IMat a = m;
  return rref_mod_p(a, p).size();
}

IMat kernel_mod_p(const IMat& m, std::uint64_t p) {
  IMat a = m;
  std::vector<std::size_t> pivots = rref_mod_p(a, p);
  const std::size_t nc = m.cols();
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < nc; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
      free_cols.push_back(c);
  IMat k(nc, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k.at(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k.at(pivots[r], f) = mod_p(-a.at(r, free_cols[f]), p);
  }
  return k;
}

std::vector<Int> solve_mod_p(const IMat& a, const std::vector<Int>& b, std::uint64_t p) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs size mismatch");
  IMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref_mod_p(aug, p);
  if (!pivots.empty() && pivots.back() == a.cols()) return {};  // inconsistent
  std::vector<Int> x(a.cols(), Int(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

}  // namespace pearllab
