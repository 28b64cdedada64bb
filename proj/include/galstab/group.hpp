#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "galstab/cyclotomic.hpp"
#include "galstab/ideal.hpp"
#include "galstab/matrix.hpp"

namespace galstab {

inline constexpr std::size_t kDefaultGroupCap = 10000;

/*
 * A finite subgroup of GL_n(Q(zeta_m)), stored as its full element list in
 * canonical order (CycMatrix::canonical_less).  Immutable once built.
 */
class FiniteMatrixGroup {
public:
  /// Takes an element list already known to be a group; sorts it.
  FiniteMatrixGroup(const CyclotomicField& field, std::size_t n, std::vector<CycMatrix> generators,
                    std::vector<CycMatrix> elements);

  const CyclotomicField& field() const { return field_; }
  std::size_t dim() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<CycMatrix>& generators() const { return generators_; }
  const std::vector<CycMatrix>& elements() const { return elements_; }

  bool contains(const CycMatrix& a) const { return index_.count(a) != 0; }
  std::optional<std::size_t> index_of(const CycMatrix& a) const;
  bool is_abelian() const;
  bool is_integral() const;
  /// Closed under products (exhaustive check).
  bool verify_closed() const;

private:
  CyclotomicField field_;
  std::size_t n_;
  std::vector<CycMatrix> generators_;
  std::vector<CycMatrix> elements_;
  std::unordered_map<CycMatrix, std::size_t> index_;
};

/// Breadth-first closure; throws CapExceeded past `cap` elements and NotInvertible for singular generators.
FiniteMatrixGroup close_group(const std::vector<CycMatrix>& generators, std::size_t cap = kDefaultGroupCap);
/// Same, for a possibly empty generator list.
FiniteMatrixGroup close_group(const CyclotomicField& field, std::size_t n, const std::vector<CycMatrix>& generators,
                              std::size_t cap = kDefaultGroupCap);

/// Least k >= 1 with A^k = I; throws CapExceeded when k > cap.
long element_order(const CycMatrix& a, long cap = 1000);

/// The exponents a with sigma_a(G) = G, as a subgroup of (Z/m)^x.
SubfieldHandle galois_stabilizer(const FiniteMatrixGroup& g);

/// min over entries of the beta-level of A - I; requires A and A^-1 integral.
Level matrix_level(const CycMatrix& a, const PrimeIdeal& beta, int cap = kDefaultLevelCap);

/// {g in G : g = I mod beta^k}; a normal subgroup.
FiniteMatrixGroup congruence_kernel(const FiniteMatrixGroup& g, const PrimeIdeal& beta, int k);

}  // namespace galstab
