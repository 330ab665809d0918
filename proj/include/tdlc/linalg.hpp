#pragma once

// Dense rational matrices, exact linear algebra over Q and over the
// localization Z_(p) (which gives the same lattices as Z_p for the
// rational generators used here).

#include "tdlc/kernel.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tdlc::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols_if_empty = 0);
  static Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> row(std::size_t r) const;
  Matrix transpose() const;
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  // columns of *this followed by columns of o
  Matrix hconcat(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool is_zero() const;

  void swap_columns(std::size_t a, std::size_t b);
  // col[dst] -= q * col[src]
  void sub_column(std::size_t dst, std::size_t src, const Rational& q);
  void scale_column(std::size_t c, const Rational& q);
  void drop_columns_from(std::size_t c);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// p-adic valuation, requires x != 0
long valuation(const Integer& x, const Integer& p);
long valuation(const Rational& x, const Integer& p);

// ---- over Q ----
std::size_t rank(const Matrix& m);
// columns form a basis of {x : m x = 0}
Matrix nullspace(const Matrix& m);
// rows form a basis of {y : y m = 0}
Matrix left_nullspace(const Matrix& m);
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);
// canonical basis of the column span: the reduced row echelon form of the
// transpose, returned as columns; pivot_coords receives the pivot coordinate of each
Matrix span_basis(const Matrix& m, std::vector<std::size_t>* pivot_coords = nullptr);
bool in_span(const Matrix& basis, const std::vector<Rational>& v);
std::optional<Matrix> inverse(const Matrix& a);
std::vector<Rational> char_poly(const Matrix& a);  // coefficients c_0..c_n, monic
Matrix poly_eval(const std::vector<Rational>& coeffs, const Matrix& a);

// ---- over Z_(p) ----
struct Echelon {
  Matrix reduced;    // m * transform, nonzero columns first
  Matrix transform;  // invertible over Z_(p)
  std::size_t rank = 0;
};
Echelon column_echelon(const Matrix& m, const Integer& p);
// columns are a Z_p basis of {x in Z_p^n : m x = 0}
Matrix lattice_kernel(const Matrix& m, const Integer& p);

struct Hermite {
  Matrix basis;                      // columns, entries in Z_(p), pivot entries exactly p^v
  long exponent = 0;                 // module = p^exponent * span(basis)
  std::vector<std::size_t> pivot_rows;
  std::vector<long> pivot_vals;
};
// canonical Hermite form of the Z_p span of the columns
Hermite hermite(const Matrix& m, const Integer& p);
// canonical representative of a in Z_(p) modulo p^v, as an integer in [0, p^v)
Rational residue(const Rational& a, long v, const Integer& p);

}  // namespace tdlc::linalg
