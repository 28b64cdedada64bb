#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galstab/cyclotomic.hpp"
#include "galstab/intmat.hpp"

namespace galstab {

/// Square matrix over one cyclotomic field, row-major.
class CycMatrix {
public:
  CycMatrix(const CyclotomicField& field, std::size_t n);

  static CycMatrix identity(const CyclotomicField& field, std::size_t n);
  static CycMatrix from_integers(const CyclotomicField& field, const IntMatrix& a);
  static CycMatrix diagonal(const std::vector<CycElement>& entries);
  /// Matrix sending e_j to e_{perm[j]}, i.e. entry (perm[j], j) = 1.
  static CycMatrix permutation(const CyclotomicField& field, const std::vector<std::size_t>& perm);

  const CyclotomicField& field() const { return field_; }
  std::size_t dim() const { return n_; }
  CycElement& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const CycElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<CycElement>& entries() const { return entries_; }

  CycMatrix operator*(const CycMatrix& rhs) const;
  CycMatrix operator+(const CycMatrix& rhs) const;
  CycMatrix operator-(const CycMatrix& rhs) const;
  CycMatrix scaled(const CycElement& c) const;
  CycMatrix pow(long e) const;
  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<CycMatrix> try_inverse() const;
  /// Throws NotInvertible when singular.
  CycMatrix inverse() const;
  CycElement determinant() const;
  /// Entrywise zeta -> zeta^a.
  CycMatrix galois(long a) const;

  bool is_identity() const;
  bool is_integral() const;
  bool is_diagonal() const;
  bool is_rational() const;
  /// Exactly one nonzero entry in every row and column.
  bool is_monomial() const;
  /// The integer matrix when every entry is a rational integer.
  std::optional<IntMatrix> to_integers() const;

  bool operator==(const CycMatrix& other) const;
  /// Total order: row-major over entries, each compared by CycElement::compare.
  bool canonical_less(const CycMatrix& other) const;
  std::size_t hash() const;

  std::string to_string() const;

private:
  CyclotomicField field_;
  std::size_t n_;
  std::vector<CycElement> entries_;
};

}  // namespace galstab

template <>
struct std::hash<galstab::CycMatrix> {
  std::size_t operator()(const galstab::CycMatrix& a) const noexcept { return a.hash(); }
};
