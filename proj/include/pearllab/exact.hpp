#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace pearllab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

/// Element of F_p with p checked prime at construction.
class Fp {
 public:
  Fp(Int value, std::uint64_t p);

  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp inverse() const;
  Fp pow(std::uint64_t e) const;
  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }

 private:
  std::uint64_t v_;
  std::uint64_t p_;
};

/// Dense rectangular matrix over an exact ring R (Int, Rat).
template <typename R>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("matrix entry count mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix res(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const R& a = at(i, k);
        if (a == R(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          res.at(i, j) += a * o.at(k, j);
      }
    return res;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const {
    for (const R& x : data_)
      if (x != R(0)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<R> data_;
};

using IMat = Matrix<Int>;

struct SNFResult {
  IMat D;  // diagonal, d1 | d2 | ...
  IMat U;  // unimodular, U*M*V = D
  IMat V;
  IMat Vinv;
  std::size_t rank = 0;
};

/// Smith normal form by unimodular row/column reduction.
/// Pivot: smallest nonzero absolute value, ties row-major.
SNFResult smith_normal_form(const IMat& m);

Int determinant(const IMat& m);

/// Monic characteristic polynomial of a square integer matrix,
/// coefficients lowest degree first (size n+1, last entry 1).
/// Faddeev-LeVerrier; the interior divisions are exact over Z.
std::vector<Int> char_poly(const IMat& m);

Int eval_poly(const std::vector<Int>& coeffs, const Int& x);

/// All residues r in [0,p) with poly(r) = 0 mod p, by exhaustive evaluation.
/// Throws if p is not prime or poly vanishes identically mod p.
std::set<std::uint64_t> roots_mod_p(const std::vector<Int>& coeffs, std::uint64_t p);

/// Prime divisors of |n| by trial division; throws on n = 0.
std::set<std::uint64_t> prime_divisors(const Int& n);

// --- mod-p linear algebra on integer matrices ---

std::size_t rank_mod_p(const IMat& m, std::uint64_t p);

/// Basis of the right kernel mod p, as columns.
IMat kernel_mod_p(const IMat& m, std::uint64_t p);

/// Solves A x = b mod p; empty result if inconsistent.
std::vector<Int> solve_mod_p(const IMat& a, const std::vector<Int>& b, std::uint64_t p);

Int mod_p(const Int& x, std::uint64_t p);

}  // namespace pearllab
