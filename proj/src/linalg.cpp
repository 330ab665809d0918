#include "tdlc/linalg.hpp"

#include <algorithm>

namespace tdlc::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols_if_empty) {
  std::size_t nc = rows.empty() ? cols_if_empty : rows[0].size();
  Matrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return std::vector<Rational>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const { return block(0, first, rows_, count); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Matrix Matrix::hconcat(const Matrix& o) const {
  if (o.rows_ != rows_) throw PreconditionError("hconcat: row mismatch");
  Matrix m(rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) m(r, cols_ + c) = o(r, c);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix product: shape mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (o(k, c) != 0) m(r, c) += a * o(k, c);
    }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

void Matrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void Matrix::sub_column(std::size_t dst, std::size_t src, const Rational& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) -= q * (*this)(r, src);
}

void Matrix::scale_column(std::size_t c, const Rational& q) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) *= q;
}

void Matrix::drop_columns_from(std::size_t c) {
  if (c >= cols_) return;
  *this = columns(0, c);
}

long valuation(const Integer& x, const Integer& p) {
  if (x == 0) throw PreconditionError("valuation of zero");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& x, const Integer& p) {
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

namespace {

// Row reduce in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(row, k));
    Rational inv = 1 / m(row, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k)
        if (m(row, k) != 0) m(r, k) -= f * m(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix w = m;
  return rref(w).size();
}

Matrix nullspace(const Matrix& m) {
  Matrix w = m;
  auto pivots = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -w(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, m.cols());
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()).transpose(); }

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(aug);
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == a.cols()) return std::nullopt;
    x[pivots[i]] = aug(i, a.cols());
  }
  return x;
}

Matrix span_basis(const Matrix& m, std::vector<std::size_t>* pivot_coords) {
  Matrix t = m.transpose();
  auto pivots = rref(t);
  if (pivot_coords) *pivot_coords = pivots;
  return t.block(0, 0, pivots.size(), t.cols()).transpose();
}

bool in_span(const Matrix& basis, const std::vector<Rational>& v) {
  if (basis.cols() == 0) return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  return solve(basis, v).has_value();
}

std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Matrix aug = a.hconcat(Matrix::identity(n));
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

std::vector<Rational> char_poly(const Matrix& a) {
  // Faddeev-LeVerrier
  std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    Matrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

Matrix poly_eval(const std::vector<Rational>& coeffs, const Matrix& a) {
  std::size_t n = a.rows();
  Matrix acc(n, n);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += coeffs[i];
  }
  return acc;
}

Echelon column_echelon(const Matrix& m, const Integer& p) {
  Echelon e{m, Matrix::identity(m.cols()), 0};
  Matrix& a = e.reduced;
  std::size_t c = 0;
  for (std::size_t r = 0; r < a.rows() && c < a.cols(); ++r) {
    std::size_t best = a.cols();
    long bestv = 0;
    for (std::size_t j = c; j < a.cols(); ++j) {
      if (a(r, j) == 0) continue;
      long v = valuation(a(r, j), p);
      if (best == a.cols() || v < bestv) best = j, bestv = v;
    }
    if (best == a.cols()) continue;
    a.swap_columns(c, best);
    e.transform.swap_columns(c, best);
    for (std::size_t j = c + 1; j < a.cols(); ++j) {
      if (a(r, j) == 0) continue;
      Rational q = a(r, j) / a(r, c);
      a.sub_column(j, c, q);
      e.transform.sub_column(j, c, q);
    }
    ++c;
  }
  e.rank = c;
  return e;
}

Matrix lattice_kernel(const Matrix& m, const Integer& p) {
  Echelon e = column_echelon(m, p);
  return e.transform.columns(e.rank, m.cols() - e.rank);
}

Rational residue(const Rational& a, long v, const Integer& p) {
  if (v <= 0 || a == 0) return 0;
  Integer mod = ipow(p, static_cast<unsigned long>(v));
  Integer inv;
  Integer den = a.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw PreconditionError("residue: denominator not a unit");
  Integer r = Integer(a.get_num()) * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return Rational(r);
}

Hermite hermite(const Matrix& m, const Integer& p) {
  Hermite h;
  bool any = false;
  long minv = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      long v = valuation(m(r, c), p);
      if (!any || v < minv) minv = v, any = true;
    }
  if (!any) {
    h.basis = Matrix(m.rows(), 0);
    return h;
  }
  h.exponent = minv;
  Rational scale = minv >= 0 ? Rational(1, 1) / Rational(ipow(p, minv)) : Rational(ipow(p, -minv));
  Matrix a = m;
  for (std::size_t c = 0; c < a.cols(); ++c) a.scale_column(c, scale);
  std::size_t c = 0;
  for (std::size_t r = 0; r < a.rows() && c < a.cols(); ++r) {
    std::size_t best = a.cols();
    long bestv = 0;
    for (std::size_t j = c; j < a.cols(); ++j) {
      if (a(r, j) == 0) continue;
      long v = valuation(a(r, j), p);
      if (best == a.cols() || v < bestv) best = j, bestv = v;
    }
    if (best == a.cols()) continue;
    a.swap_columns(c, best);
    Rational pv(ipow(p, static_cast<unsigned long>(bestv)));
    a.scale_column(c, pv / a(r, c));
    for (std::size_t j = c + 1; j < a.cols(); ++j)
      if (a(r, j) != 0) a.sub_column(j, c, a(r, j) / pv);
    for (std::size_t j = 0; j < c; ++j) {
      if (a(r, j) == 0) continue;
      Rational rep = residue(a(r, j), bestv, p);
      a.sub_column(j, c, (a(r, j) - rep) / pv);
    }
    h.pivot_rows.push_back(r);
    h.pivot_vals.push_back(bestv);
    ++c;
  }
  a.drop_columns_from(c);
  h.basis = a;
  return h;
}

}  // namespace tdlc::linalg
