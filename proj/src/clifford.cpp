#include "pearllab/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace pearllab {

namespace {

std::uint64_t umod(std::uint64_t a, std::uint64_t p) { return a % p; }

std::uint64_t uadd(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }

std::uint64_t umul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t uneg(std::uint64_t a, std::uint64_t p) { return (p - a % p) % p; }

std::uint64_t uinv(std::uint64_t a, std::uint64_t p) { return Fp(Int(a), p).inverse().residue(); }

int parity(std::size_t mask) { return std::popcount(mask) & 1; }

std::uint64_t form_entry(const BilinearForm& f, std::size_t i, std::size_t j) {
  return static_cast<std::uint64_t>(mod_p(f.b.at(i, j), f.p));
}

/// e_S * e_i as a sparse sum of basis monomials.
void mono_times_gen(const BilinearForm& f, std::size_t mask, std::size_t i,
                    std::uint64_t coeff, std::vector<std::uint64_t>& out) {
  if (coeff == 0) return;
  if (mask == 0) {
    out[std::size_t(1) << i] = uadd(out[std::size_t(1) << i], coeff, f.p);
    return;
  }
  std::size_t j = std::size_t(std::bit_width(mask)) - 1;  // largest generator index in mask
  std::size_t rest = mask & ~(std::size_t(1) << j);
  if (j < i) {
    out[mask | (std::size_t(1) << i)] = uadd(out[mask | (std::size_t(1) << i)], coeff, f.p);
  } else if (j == i) {
    // e_i e_i = B_ii / 2
    std::uint64_t sq = umul(form_entry(f, i, i), uinv(2, f.p), f.p);
    out[rest] = uadd(out[rest], umul(coeff, sq, f.p), f.p);
  } else {
    // e_rest e_j e_i = B_ji e_rest - (e_rest e_i) e_j
    out[rest] = uadd(out[rest], umul(coeff, form_entry(f, j, i), f.p), f.p);
    std::vector<std::uint64_t> tmp(out.size(), 0);
    mono_times_gen(f, rest, i, coeff, tmp);
    for (std::size_t t = 0; t < tmp.size(); ++t) {
      if (tmp[t] == 0) continue;
      // appending e_j keeps the monomial ordered: all indices in tmp are < j
      out[t | (std::size_t(1) << j)] = uadd(out[t | (std::size_t(1) << j)], uneg(tmp[t], f.p), f.p);
    }
  }
}

/// e_S * e_T as a dense coefficient vector.
std::vector<std::uint64_t> mono_times_mono(const BilinearForm& f, std::size_t s, std::size_t t) {
  std::size_t dim = std::size_t(1) << f.n;
  std::vector<std::uint64_t> acc(dim, 0);
  acc[s] = 1;
  for (std::size_t i = 0; i < f.n; ++i) {
    if (!(t & (std::size_t(1) << i))) continue;
    std::vector<std::uint64_t> next(dim, 0);
    for (std::size_t m = 0; m < dim; ++m)
      if (acc[m] != 0) mono_times_gen(f, m, i, acc[m], next);
    acc = std::move(next);
  }
  return acc;
}

IMat left_mult_matrix(const CliffordElement& x, const BilinearForm& f) {
  std::size_t dim = std::size_t(1) << f.n;
  IMat m(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    if (x.c[s] == 0) continue;
    for (std::size_t t = 0; t < dim; ++t) {
      auto prod = mono_times_mono(f, s, t);
      for (std::size_t r = 0; r < dim; ++r)
        m.at(r, t) = mod_p(m.at(r, t) + Int(umul(x.c[s], prod[r], f.p)), f.p);
    }
  }
  return m;
}

IMat right_mult_matrix(const CliffordElement& x, const BilinearForm& f) {
  std::size_t dim = std::size_t(1) << f.n;
  IMat m(dim, dim);
  for (std::size_t t = 0; t < dim; ++t) {
    if (x.c[t] == 0) continue;
    for (std::size_t s = 0; s < dim; ++s) {
      auto prod = mono_times_mono(f, s, t);
      for (std::size_t r = 0; r < dim; ++r)
        m.at(r, s) = mod_p(m.at(r, s) + Int(umul(x.c[t], prod[r], f.p)), f.p);
    }
  }
  return m;
}

CliffordElement from_column(const IMat& cols, std::size_t j, const BilinearForm& f) {
  CliffordElement e = clifford_zero(f);
  for (std::size_t i = 0; i < cols.rows(); ++i)
    e.c[i] = static_cast<std::uint64_t>(mod_p(cols.at(i, j), f.p));
  return e;
}

/// Kernel of the stacked generator-(super)commutator maps, restricted to
/// the monomials of one parity.
std::size_t parity_kernel(const BilinearForm& f, bool super, int par,
                          std::vector<CliffordElement>* basis_out) {
  std::size_t dim = std::size_t(1) << f.n;
  std::vector<std::size_t> cols;
  for (std::size_t m = 0; m < dim; ++m)
    if (parity(m) == par) cols.push_back(m);
  // e_i x -/+ x e_i sends parity par to parity 1-par
  IMat sys(f.n * dim, cols.size());
  for (std::size_t i = 0; i < f.n; ++i) {
    IMat gl = left_mult_matrix(clifford_generator(f, i), f);
    IMat gr = right_mult_matrix(clifford_generator(f, i), f);
    for (std::size_t cj = 0; cj < cols.size(); ++cj) {
      std::size_t m = cols[cj];
      // sign on the right term: -1 ordinarily, +1 for the supercommutator
      // of the odd generator with an odd element
      Int sgn = (super && parity(m) == 1) ? Int(1) : Int(-1);
      for (std::size_t r = 0; r < dim; ++r)
        sys.at(i * dim + r, cj) = mod_p(gl.at(r, m) + sgn * gr.at(r, m), f.p);
    }
  }
  IMat ker = kernel_mod_p(sys, f.p);
  if (basis_out) {
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      CliffordElement e = clifford_zero(f);
      for (std::size_t cj = 0; cj < cols.size(); ++cj)
        e.c[cols[cj]] = static_cast<std::uint64_t>(mod_p(ker.at(cj, j), f.p));
      basis_out->push_back(e);
    }
  }
  return ker.cols();
}

SubspaceSplit commutant_split(const BilinearForm& f, bool super) {
  f.validate();
  SubspaceSplit s;
  s.even_dim = parity_kernel(f, super, 0, &s.basis);
  s.odd_dim = parity_kernel(f, super, 1, &s.basis);
  return s;
}

bool has_degree_pattern(const IMat& m, const std::vector<int>& row_deg,
                        const std::vector<int>& col_deg, int shift, std::uint64_t p) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (((row_deg[i] + col_deg[j] + shift) & 1) == 1 && mod_p(m.at(i, j), p) != 0)
        return false;
  return true;
}

/// Basis of intertwiners T with T A_i^M = A_i^N T of the given parity.
std::vector<IMat> intertwiner_basis(const GradedModule& m, const GradedModule& n, int par) {
  if (m.p != n.p || m.actions.size() != n.actions.size())
    throw std::invalid_argument("graded modules over different forms");
  std::uint64_t p = m.p;
  // unknown entries: T(a,b) with deg_N(a) + deg_M(b) = par mod 2
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n.dim; ++a)
    for (std::size_t b = 0; b < m.dim; ++b)
      if (((n.degrees[a] + m.degrees[b] + par) & 1) == 0) slots.emplace_back(a, b);
  IMat sys(m.actions.size() * n.dim * m.dim, slots.size());
  for (std::size_t g = 0; g < m.actions.size(); ++g) {
    const IMat& am = m.actions[g];
    const IMat& an = n.actions[g];
    for (std::size_t k = 0; k < slots.size(); ++k) {
      auto [a, b] = slots[k];
      // contribution of T(a,b) to equation (g, r, c) of T*Am - An*T = 0
      for (std::size_t c = 0; c < m.dim; ++c)
        sys.at((g * n.dim + a) * m.dim + c, k) =
            mod_p(sys.at((g * n.dim + a) * m.dim + c, k) + am.at(b, c), p);
      for (std::size_t r = 0; r < n.dim; ++r)
        sys.at((g * n.dim + r) * m.dim + b, k) =
            mod_p(sys.at((g * n.dim + r) * m.dim + b, k) - an.at(r, a), p);
    }
  }
  IMat ker = kernel_mod_p(sys, p);
  std::vector<IMat> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    IMat t(n.dim, m.dim);
    for (std::size_t k = 0; k < slots.size(); ++k)
      t.at(slots[k].first, slots[k].second) = mod_p(ker.at(k, j), p);
    out.push_back(t);
  }
  return out;
}

}  // namespace

void BilinearForm::validate() const {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("form characteristic must be an odd prime");
  if (b.rows() != n || b.cols() != n) throw std::invalid_argument("form matrix shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mod_p(b.at(i, j) - b.at(j, i), p) != 0)
        throw std::invalid_argument("form matrix must be symmetric");
}

BilinearForm torus_form(std::uint64_t zeta_rep, std::uint64_t p) {
  BilinearForm f;
  f.n = 3;
  f.p = p;
  f.b = IMat(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      f.b.at(i, j) = mod_p(Int(2) * Int(zeta_rep) * (i == j ? 2 : 1), p);
  f.validate();
  return f;
}

BilinearForm zero_form(std::size_t n, std::uint64_t p) {
  BilinearForm f;
  f.n = n;
  f.p = p;
  f.b = IMat(n, n);
  f.validate();
  return f;
}

bool CliffordElement::is_zero() const {
  for (auto v : c)
    if (v != 0) return false;
  return true;
}

CliffordElement clifford_zero(const BilinearForm& form) {
  CliffordElement e;
  e.c.assign(std::size_t(1) << form.n, 0);
  return e;
}

CliffordElement clifford_one(const BilinearForm& form) {
  CliffordElement e = clifford_zero(form);
  e.c[0] = 1;
  return e;
}

CliffordElement clifford_generator(const BilinearForm& form, std::size_t i) {
  if (i >= form.n) throw std::out_of_range("generator index");
  CliffordElement e = clifford_zero(form);
  e.c[std::size_t(1) << i] = 1;
  return e;
}

CliffordElement clifford_add(const CliffordElement& a, const CliffordElement& b,
                             const BilinearForm& form) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("element size mismatch");
  CliffordElement out = clifford_zero(form);
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = uadd(a.c[i], b.c[i], form.p);
  return out;
}

CliffordElement clifford_scale(const CliffordElement& a, std::uint64_t s,
                               const BilinearForm& form) {
  CliffordElement out = clifford_zero(form);
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = umul(a.c[i], umod(s, form.p), form.p);
  return out;
}

CliffordElement clifford_multiply(const CliffordElement& a, const CliffordElement& b,
                                  const BilinearForm& form) {
  std::size_t dim = std::size_t(1) << form.n;
  if (a.c.size() != dim || b.c.size() != dim)
    throw std::invalid_argument("element does not match form dimension");
  CliffordElement out = clifford_zero(form);
  for (std::size_t s = 0; s < dim; ++s) {
    if (a.c[s] == 0) continue;
    for (std::size_t t = 0; t < dim; ++t) {
      if (b.c[t] == 0) continue;
      auto prod = mono_times_mono(form, s, t);
      std::uint64_t coeff = umul(a.c[s], b.c[t], form.p);
      for (std::size_t r = 0; r < dim; ++r)
        out.c[r] = uadd(out.c[r], umul(coeff, prod[r], form.p), form.p);
    }
  }
  return out;
}

SubspaceSplit center(const BilinearForm& form) { return commutant_split(form, false); }

SubspaceSplit supercenter(const BilinearForm& form) { return commutant_split(form, true); }

std::pair<CliffordElement, std::uint64_t> central_odd_element(const BilinearForm& form) {
  form.validate();
  if (form.n % 2 == 0) throw std::invalid_argument("odd dimension required");
  if (mod_p(determinant(form.b), form.p) == 0)
    throw std::invalid_argument("form must be nondegenerate");
  std::size_t n = form.n;
  std::uint64_t p = form.p;
  // symmetric Gaussian elimination: P^T B P diagonal, first nonzero
  // diagonal entry as pivot
  std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = form_entry(form, i, j);
  std::vector<std::vector<std::uint64_t>> pm(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) pm[i][i] = 1;
  auto add_col = [&](std::vector<std::vector<std::uint64_t>>& m, std::size_t dst,
                     std::size_t src, std::uint64_t fac) {
    for (std::size_t r = 0; r < n; ++r) m[r][dst] = uadd(m[r][dst], umul(fac, m[r][src], p), p);
  };
  auto add_row = [&](std::vector<std::vector<std::uint64_t>>& m, std::size_t dst,
                     std::size_t src, std::uint64_t fac) {
    for (std::size_t c = 0; c < n; ++c) m[dst][c] = uadd(m[dst][c], umul(fac, m[src][c], p), p);
  };
  auto swap_cols = [&](std::vector<std::vector<std::uint64_t>>& m, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) std::swap(m[r][a], m[r][b]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t j = k; j < n; ++j)
      if (w[j][j] != 0) {
        piv = j;
        break;
      }
    if (piv == n) {
      // all diagonal entries vanish: fold an off-diagonal one in
      bool found = false;
      for (std::size_t r = k; r < n && !found; ++r)
        for (std::size_t c = r + 1; c < n && !found; ++c)
          if (w[r][c] != 0) {
            add_col(w, r, c, 1);
            add_row(w, r, c, 1);
            add_col(pm, r, c, 1);
            piv = r;
            found = true;
          }
      if (!found) throw std::invalid_argument("form must be nondegenerate");
    }
    if (piv != k) {
      swap_cols(w, k, piv);
      for (std::size_t c = 0; c < n; ++c) std::swap(w[k][c], w[piv][c]);
      swap_cols(pm, k, piv);
    }
    std::uint64_t inv = uinv(w[k][k], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (w[i][k] == 0) continue;
      std::uint64_t fac = uneg(umul(w[i][k], inv, p), p);
      add_col(w, i, k, fac);
      add_row(w, i, k, fac);
      add_col(pm, i, k, fac);
    }
  }
  // f_i = sum_j P[j][i] e_j; z = f_1 ... f_n
  CliffordElement z = clifford_one(form);
  for (std::size_t i = 0; i < n; ++i) {
    CliffordElement fi = clifford_zero(form);
    for (std::size_t j = 0; j < n; ++j)
      fi = clifford_add(fi, clifford_scale(clifford_generator(form, j), pm[j][i], form), form);
    z = clifford_multiply(z, fi, form);
  }
  for (std::size_t i = 0; i < n; ++i) {
    CliffordElement gi = clifford_generator(form, i);
    CliffordElement comm = clifford_add(
        clifford_multiply(z, gi, form),
        clifford_scale(clifford_multiply(gi, z, form), p - 1, form), form);
    if (!comm.is_zero()) throw std::logic_error("constructed odd element is not central");
  }
  CliffordElement zsq = clifford_multiply(z, z, form);
  for (std::size_t r = 1; r < zsq.c.size(); ++r)
    if (zsq.c[r] != 0) throw std::logic_error("z^2 is not scalar");
  return {z, zsq.c[0]};
}

EvenSplit even_split(const BilinearForm& form) {
  form.validate();
  std::size_t dim = std::size_t(1) << form.n;
  std::vector<std::size_t> even_masks;
  for (std::size_t m = 0; m < dim; ++m)
    if (parity(m) == 0) even_masks.push_back(m);
  std::size_t k = even_masks.size();
  double total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= double(form.p);
  if (total > 1e4 + 0.5) throw std::invalid_argument("even subalgebra too large for exhaustive scan");
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= form.p;
  for (std::size_t code = 1; code < count; ++code) {
    CliffordElement x = clifford_zero(form);
    std::size_t rem = code;
    for (std::size_t i = 0; i < k; ++i) {
      x.c[even_masks[i]] = rem % form.p;
      rem /= form.p;
    }
    CliffordElement xsq = clifford_multiply(x, x, form);
    if (!(xsq == x)) continue;
    if (x == clifford_one(form)) continue;
    // dim Cl0 * x over the even monomial coordinates
    IMat cols(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      CliffordElement b = clifford_zero(form);
      b.c[even_masks[i]] = 1;
      CliffordElement prod = clifford_multiply(b, x, form);
      for (std::size_t r = 0; r < k; ++r) cols.at(r, i) = Int(prod.c[even_masks[r]]);
    }
    std::size_t d = rank_mod_p(cols, form.p);
    if (d == 2) {
      EvenSplit out;
      out.idempotent = x;
      out.module_dim = d;
      return out;
    }
  }
  throw std::runtime_error("no primitive idempotent found");
}

GradedModule induce_graded_spin(const BilinearForm& form) {
  EvenSplit es = even_split(form);
  std::size_t dim = std::size_t(1) << form.n;
  std::uint64_t p = form.p;
  // columns b_s * e, even monomials first so the basis comes out graded
  std::vector<std::size_t> order;
  for (std::size_t m = 0; m < dim; ++m)
    if (parity(m) == 0) order.push_back(m);
  for (std::size_t m = 0; m < dim; ++m)
    if (parity(m) == 1) order.push_back(m);
  std::vector<std::vector<std::uint64_t>> cand;
  std::vector<int> cand_deg;
  for (std::size_t s : order) {
    CliffordElement b = clifford_zero(form);
    b.c[s] = 1;
    CliffordElement prod = clifford_multiply(b, es.idempotent, form);
    cand.push_back(prod.c);
    cand_deg.push_back(parity(s));
  }
  // greedy independent subset
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < cand.size(); ++j) {
    IMat trial(dim, chosen.size() + 1);
    for (std::size_t cj = 0; cj < chosen.size(); ++cj)
      for (std::size_t r = 0; r < dim; ++r) trial.at(r, cj) = Int(cand[chosen[cj]][r]);
    for (std::size_t r = 0; r < dim; ++r) trial.at(r, chosen.size()) = Int(cand[j][r]);
    if (rank_mod_p(trial, p) == chosen.size() + 1) chosen.push_back(j);
  }
  GradedModule mod;
  mod.dim = chosen.size();
  mod.p = p;
  for (std::size_t j : chosen) mod.degrees.push_back(cand_deg[j]);
  IMat basis(dim, mod.dim);
  for (std::size_t cj = 0; cj < chosen.size(); ++cj)
    for (std::size_t r = 0; r < dim; ++r) basis.at(r, cj) = Int(cand[chosen[cj]][r]);
  for (std::size_t i = 0; i < form.n; ++i) {
    IMat gl = left_mult_matrix(clifford_generator(form, i), form);
    IMat img = gl * basis;
    IMat act(mod.dim, mod.dim);
    for (std::size_t j = 0; j < mod.dim; ++j) {
      std::vector<Int> col(dim);
      for (std::size_t r = 0; r < dim; ++r) col[r] = mod_p(img.at(r, j), p);
      auto sol = solve_mod_p(basis, col, p);
      if (sol.empty() && mod.dim > 0) {
        bool zero = true;
        for (const auto& v : col)
          if (v != 0) zero = false;
        if (!zero) throw std::logic_error("module not closed under generator action");
      }
      for (std::size_t r = 0; r < mod.dim && r < sol.size(); ++r) act.at(r, j) = sol[r];
    }
    mod.actions.push_back(act);
  }
  // relation and parity checks
  for (std::size_t i = 0; i < form.n; ++i) {
    if (!has_degree_pattern(mod.actions[i], mod.degrees, mod.degrees, 1, p))
      throw std::logic_error("generator action is not odd");
    for (std::size_t j = 0; j < form.n; ++j) {
      IMat anti = mod.actions[i] * mod.actions[j];
      IMat ba = mod.actions[j] * mod.actions[i];
      for (std::size_t r = 0; r < mod.dim; ++r)
        for (std::size_t c = 0; c < mod.dim; ++c) {
          Int want = (r == c) ? Int(form_entry(form, i, j)) : Int(0);
          if (mod_p(anti.at(r, c) + ba.at(r, c) - want, p) != 0)
            throw std::logic_error("action matrices violate the Clifford relations");
        }
    }
  }
  return mod;
}

GradedModule graded_direct_sum(const GradedModule& m, const GradedModule& n) {
  if (m.p != n.p || m.actions.size() != n.actions.size())
    throw std::invalid_argument("graded modules over different forms");
  GradedModule out;
  out.dim = m.dim + n.dim;
  out.p = m.p;
  out.degrees = m.degrees;
  out.degrees.insert(out.degrees.end(), n.degrees.begin(), n.degrees.end());
  for (std::size_t g = 0; g < m.actions.size(); ++g) {
    IMat a(out.dim, out.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) a.at(r, c) = m.actions[g].at(r, c);
    for (std::size_t r = 0; r < n.dim; ++r)
      for (std::size_t c = 0; c < n.dim; ++c) a.at(m.dim + r, m.dim + c) = n.actions[g].at(r, c);
    out.actions.push_back(a);
  }
  return out;
}

GradedModule graded_shift(const GradedModule& m) {
  GradedModule out = m;
  for (auto& d : out.degrees) d ^= 1;
  return out;
}

std::pair<std::size_t, std::size_t> graded_hom(const GradedModule& m, const GradedModule& n) {
  return {intertwiner_basis(m, n, 0).size(), intertwiner_basis(m, n, 1).size()};
}

std::uint64_t ext_presentation(const BilinearForm& form) {
  GradedModule s = induce_graded_spin(form);
  auto odd = intertwiner_basis(s, s, 1);
  if (odd.size() != 1) throw std::logic_error("odd Hom space is not one-dimensional");
  IMat t2 = odd[0] * odd[0];
  std::uint64_t c = static_cast<std::uint64_t>(mod_p(t2.at(0, 0), form.p));
  for (std::size_t r = 0; r < t2.rows(); ++r)
    for (std::size_t j = 0; j < t2.cols(); ++j) {
      Int want = (r == j) ? Int(c) : Int(0);
      if (mod_p(t2.at(r, j) - want, form.p) != 0)
        throw std::logic_error("square of the odd generator is not scalar");
    }
  return c;
}

bool is_nonzero_square_mod_p(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return false;
  for (std::uint64_t r = 1; r < p; ++r)
    if (r * r % p == a) return true;
  return false;
}

bool same_square_class(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  a %= p;
  b %= p;
  if (a == 0 || b == 0) return a == b;
  return is_nonzero_square_mod_p(a * uinv(b, p) % p, p);
}

std::pair<std::size_t, std::size_t> hochschild_low(const BilinearForm& form) {
  form.validate();
  std::size_t dim = std::size_t(1) << form.n;
  std::uint64_t p = form.p;
  SubspaceSplit sc = supercenter(form);
  std::size_t der_total = 0;
  std::size_t inner_total = 0;
  for (int par = 0; par <= 1; ++par) {
    // unknowns: D(r,s) with parity(r) = parity(s) + par
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t s = 0; s < dim; ++s)
        if (((parity(r) + parity(s) + par) & 1) == 0) slots.emplace_back(r, s);
    // Leibniz on basis pairs: D(b_t b_u) = D(b_t) b_u + (-1)^{par*|t|} b_t D(b_u)
    IMat sys(dim * dim * dim, slots.size());
    for (std::size_t t = 0; t < dim; ++t) {
      CliffordElement bt = clifford_zero(form);
      bt.c[t] = 1;
      IMat lt = left_mult_matrix(bt, form);
      for (std::size_t u = 0; u < dim; ++u) {
        CliffordElement bu = clifford_zero(form);
        bu.c[u] = 1;
        IMat ru = right_mult_matrix(bu, form);
        auto prod = mono_times_mono(form, t, u);
        std::size_t base = (t * dim + u) * dim;
        Int sgn = (par == 1 && parity(t) == 1) ? Int(-1) : Int(1);
        for (std::size_t k = 0; k < slots.size(); ++k) {
          auto [r, s] = slots[k];
          // -D(b_t b_u): coefficient of unknown D(r,s) in row (base + r)
          sys.at(base + r, k) = mod_p(sys.at(base + r, k) - Int(prod[s]), p);
          // +D(b_t) b_u: D(:,t) pushed through right mult by b_u
          if (s == t)
            for (std::size_t row = 0; row < dim; ++row)
              sys.at(base + row, k) = mod_p(sys.at(base + row, k) + ru.at(row, r), p);
          // +(-1)^{par |t|} b_t D(:,u)
          if (s == u)
            for (std::size_t row = 0; row < dim; ++row)
              sys.at(base + row, k) = mod_p(sys.at(base + row, k) + sgn * lt.at(row, r), p);
        }
      }
    }
    IMat ker = kernel_mod_p(sys, p);
    der_total += ker.cols();
    std::size_t half = dim / 2;
    std::size_t sc_par = (par == 0) ? sc.even_dim : sc.odd_dim;
    inner_total += half - sc_par;
  }
  return {sc.dim(), der_total - inner_total};
}

}  // namespace pearllab
