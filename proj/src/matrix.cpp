#include "galstab/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace galstab {

CycMatrix::CycMatrix(const CyclotomicField& field, std::size_t n)
    : field_(field), n_(n), entries_(n * n, CycElement(field)) {}

CycMatrix CycMatrix::identity(const CyclotomicField& field, std::size_t n) {
  CycMatrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycElement::one(field);
  return m;
}

CycMatrix CycMatrix::from_integers(const CyclotomicField& field, const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
  CycMatrix m(field, a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = CycElement::from_integer(field, a(i, j));
  return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<CycElement>& entries) {
  if (entries.empty()) throw Error(ErrorKind::InvalidArgument, "empty diagonal");
  CycMatrix m(entries.front().field(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CycMatrix CycMatrix::permutation(const CyclotomicField& field, const std::vector<std::size_t>& perm) {
  CycMatrix m(field, perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = CycElement::one(field);
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
  if (n_ != rhs.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  if (!(field_ == rhs.field_)) throw Error(ErrorKind::FieldMismatch, "matrix product");
  CycMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const CycElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const CycElement& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& rhs) const {
  if (n_ != rhs.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  CycMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
  if (n_ != rhs.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  CycMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
  return out;
}

CycMatrix CycMatrix::scaled(const CycElement& c) const {
  CycMatrix out = *this;
  for (auto& e : out.entries_) e = e * c;
  return out;
}

CycMatrix CycMatrix::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycMatrix result = identity(field_, n_);
  CycMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<CycMatrix> CycMatrix::try_inverse() const {
  CycMatrix a = *this;
  CycMatrix inv = identity(field_, n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && a(piv, col).is_zero()) ++piv;
    if (piv == n_) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const CycElement scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n_; ++j) {
      a(col, j) = a(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const CycElement factor = a(r, col);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= factor * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

CycMatrix CycMatrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw Error(ErrorKind::NotInvertible, to_string());
  return *inv;
}

CycElement CycMatrix::determinant() const {
  CycMatrix a = *this;
  CycElement det = CycElement::one(field_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && a(piv, col).is_zero()) ++piv;
    if (piv == n_) return CycElement::zero(field_);
    if (piv != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const CycElement inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (a(r, col).is_zero()) continue;
      const CycElement factor = a(r, col) * inv;
      for (std::size_t j = col; j < n_; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return det;
}

CycMatrix CycMatrix::galois(long a) const {
  CycMatrix out = *this;
  for (auto& e : out.entries_) e = e.galois(a);
  return out;
}

bool CycMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const CycElement& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

bool CycMatrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CycElement& e) { return e.is_integral(); });
}

bool CycMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool CycMatrix::is_rational() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CycElement& e) { return e.is_rational(); });
}

bool CycMatrix::is_monomial() const {
  std::vector<int> col_count(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (!(*this)(i, j).is_zero()) {
        ++row_count;
        ++col_count[j];
      }
    if (row_count != 1) return false;
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

std::optional<IntMatrix> CycMatrix::to_integers() const {
  IntMatrix out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const CycElement& e = (*this)(i, j);
      if (!e.is_integral() || !e.is_rational()) return std::nullopt;
      out(i, j) = e.numerators()[0];
    }
  return out;
}

bool CycMatrix::operator==(const CycMatrix& other) const {
  return n_ == other.n_ && field_ == other.field_ && entries_ == other.entries_;
}

bool CycMatrix::canonical_less(const CycMatrix& other) const {
  for (std::size_t i = 0; i < entries_.size() && i < other.entries_.size(); ++i) {
    int c = entries_[i].compare(other.entries_[i]);
    if (c != 0) return c < 0;
  }
  return entries_.size() < other.entries_.size();
}

std::size_t CycMatrix::hash() const {
  std::size_t h = n_;
  for (const auto& e : entries_) h = h * 31 + e.hash();
  return h;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace galstab
