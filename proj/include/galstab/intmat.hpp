#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "galstab/cyclotomic.hpp"

namespace galstab {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<BigInt> row(std::size_t i) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& other) const = default;

  /// Rows stacked on top of each other; column counts must agree.
  static IntMatrix vstack(const std::vector<IntMatrix>& blocks);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/*
 * Row Hermite normal form: zero rows dropped, pivots strictly increasing
 * left to right, positive, and every entry above a pivot reduced into
 * [0, pivot).  Two matrices generate the same row lattice iff their HNFs
 * are identical.
 */
IntMatrix hermite_normal_form(const IntMatrix& a);

/*
 * HNF of the full-rank lattice in Z^dim generated by `generators`, given
 * that the lattice contains multiple * Z^dim.  Entries stay bounded by the
 * multiple, so this is the routine used for ideals.
 */
IntMatrix hermite_normal_form_full(const std::vector<std::vector<BigInt>>& generators, std::size_t dim,
                                   const BigInt& multiple);

/// Z-basis (rows, in HNF) of {v in Z^cols : a v = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

BigInt determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);
/// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace galstab
