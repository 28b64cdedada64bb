#include "galstab/intmat.hpp"

#include <sstream>
#include <utility>

namespace galstab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return std::vector<BigInt>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::InvalidArgument, "integer matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), rhs(k, j).get_mpz_t());
    }
  return out;
}

IntMatrix IntMatrix::vstack(const std::vector<IntMatrix>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = blocks.empty() ? 0 : blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::InvalidArgument, "vstack column mismatch");
    rows += b.rows();
  }
  IntMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

using Row = std::vector<BigInt>;

// r -= q * s, from column `from` on.
void sub_mul(Row& r, const Row& s, const BigInt& q, std::size_t from) {
  if (q == 0) return;
  for (std::size_t j = from; j < r.size(); ++j) mpz_submul(r[j].get_mpz_t(), q.get_mpz_t(), s[j].get_mpz_t());
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::vector<Row> hnf_rows(std::vector<Row> m, std::size_t cols) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
    // Euclid on the column among rows pivot_row..end.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t k = pivot_row; k < m.size(); ++k) {
        if (m[k][col] == 0) continue;
        if (best == m.size() || mpz_cmpabs(m[k][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0) best = k;
      }
      if (best == m.size()) break;
      std::swap(m[pivot_row], m[best]);
      bool done = true;
      for (std::size_t k = pivot_row + 1; k < m.size(); ++k) {
        if (m[k][col] == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), m[k][col].get_mpz_t(), m[pivot_row][col].get_mpz_t());
        sub_mul(m[k], m[pivot_row], q, col);
        if (m[k][col] != 0) done = false;
      }
      if (done) break;
    }
    if (m[pivot_row][col] == 0) continue;
    if (m[pivot_row][col] < 0)
      for (auto& v : m[pivot_row]) v = -v;
    for (std::size_t r = 0; r < pivot_row; ++r)
      sub_mul(m[r], m[pivot_row], floor_div(m[r][col], m[pivot_row][col]), col);
    ++pivot_row;
  }
  m.resize(pivot_row);
  return m;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& a) {
  std::vector<Row> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return IntMatrix::from_rows(hnf_rows(std::move(rows), a.cols()), a.cols());
}

IntMatrix hermite_normal_form_full(const std::vector<std::vector<BigInt>>& generators, std::size_t dim,
                                   const BigInt& multiple) {
  if (multiple == 0) throw Error(ErrorKind::InvalidArgument, "lattice multiple must be nonzero");
  const BigInt d = abs(multiple);
  std::vector<Row> basis(dim, Row(dim));
  for (std::size_t i = 0; i < dim; ++i) basis[i][i] = d;

  auto reduce_against_later = [&](Row& r, std::size_t from) {
    for (std::size_t j = from; j < dim; ++j)
      if (r[j] != 0) sub_mul(r, basis[j], floor_div(r[j], basis[j][j]), j);
  };

  for (const auto& gen : generators) {
    Row w = gen;
    w.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (w[i] == 0) continue;
      Row& b = basis[i];
      BigInt g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t(), w[i].get_mpz_t());
      BigInt bi = b[i] / g;
      BigInt wi = w[i] / g;
      Row nb(dim), nw(dim);
      for (std::size_t j = i; j < dim; ++j) {
        nb[j] = s * b[j] + t * w[j];
        nw[j] = bi * w[j] - wi * b[j];
      }
      b = std::move(nb);
      w = std::move(nw);
      reduce_against_later(b, i + 1);
      reduce_against_later(w, i + 1);
    }
  }
  // pivot order matters: reducing by row i only touches columns >= i
  for (std::size_t i = 1; i < dim; ++i)
    for (std::size_t r = 0; r < i; ++r) sub_mul(basis[r], basis[i], floor_div(basis[r][i], basis[i][i]), i);
  return IntMatrix::from_rows(basis, dim);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  // HNF of [A^T | I]; rows with vanishing A^T-part span the kernel.
  std::vector<Row> aug(n, Row(m + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = a(j, i);
    aug[i][m + i] = 1;
  }
  std::vector<Row> h = hnf_rows(std::move(aug), m + n);
  std::vector<Row> kernel;
  for (const auto& r : h) {
    bool zero = true;
    for (std::size_t j = 0; j < m && zero; ++j) zero = r[j] == 0;
    if (zero) kernel.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
  }
  return IntMatrix::from_rows(kernel, n);
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  // Bareiss fraction-free elimination
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  BigInt d = determinant(a);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!is_unimodular(a)) throw Error(ErrorKind::NotUnimodular, "matrix " + a.to_string());
  const std::size_t n = a.rows();
  // HNF of [A | I] is [I | A^-1] when A is unimodular.
  std::vector<Row> aug(n, Row(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n + i] = 1;
  }
  std::vector<Row> h = hnf_rows(std::move(aug), 2 * n);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = h[i][n + j];
  return inv;
}

}  // namespace galstab
