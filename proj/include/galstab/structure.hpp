#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galstab/group.hpp"
#include "galstab/intmat.hpp"
#include "galstab/matrix.hpp"

namespace galstab {

/*
 * A diagonal group with coordinates reordered so that coordinates with equal
 * characters are contiguous.  Character classes appear in order of first
 * occurrence; inside a class the original coordinate order is kept.
 */
struct StrongDiagonalForm {
  /// perm[new position] = original coordinate (0-based).
  std::vector<std::size_t> perm;
  /// k_0 = 0 < k_1 < ... < k_{s+1} = n.
  std::vector<std::size_t> block_bounds;
  /// One value vector per class, evaluated on the group's generators.
  std::vector<std::vector<CycElement>> characters;

  std::size_t dim() const { return perm.size(); }
  std::size_t block_count() const { return block_bounds.size() - 1; }
  std::vector<std::size_t> block_sizes() const;
  /// Block containing a (reordered) coordinate.
  std::size_t block_of(std::size_t coord) const;
  bool is_identity_permutation() const;
  /// S with S g S^-1 in strongly diagonal form.
  CycMatrix reordering_matrix(const CyclotomicField& field) const;
};

StrongDiagonalForm strongly_diagonal_form(const FiniteMatrixGroup& p);

bool is_block_diagonal(const CycMatrix& a, const StrongDiagonalForm& sdf);
/// Block diagonal with a scalar in every block.
bool is_block_scalar(const CycMatrix& a, const StrongDiagonalForm& sdf);

struct PermutationImage {
  /// T e_j = e_{perm[j]}.
  std::vector<std::size_t> perm;
  CycMatrix matrix;
};

/*
 * The permutation matrix T_N attached to a normalizing N of a strongly
 * diagonal P: chi_j o phi = chi_{pi(j)} with phi(g) = N^-1 g N, ties broken
 * order-preservingly.  N T_N^-1 is block diagonal.
 */
PermutationImage sigma(const CycMatrix& n, const FiniteMatrixGroup& p);

/// Matrix of x -> a x a^-1 on the block-diagonal algebra, basis E_rc block by block, row-major inside a block.
CycMatrix rho_apply(const CycMatrix& a, const StrongDiagonalForm& sdf);

// ---------------------------------------------------------------------------
// A-type

struct ATypeDecomposition {
  /// Row bases of the summands M_i of Z^n.
  std::vector<IntMatrix> sublattices;

  static ATypeDecomposition coordinate(const std::vector<std::vector<std::size_t>>& partition, std::size_t n);
};

/// For each group element g (canonical index) and summand i: eps_i(g) g M_i = M_{pi[g][i]}.
struct ATypeCertificate {
  /// Roots are zeta_{root_order}^eps[g][i], root_order = lcm(2, m).
  long root_order = 2;
  std::vector<std::vector<std::size_t>> pi;
  std::vector<std::vector<long>> eps;
};

struct ATypeResult {
  bool ok = false;
  ATypeCertificate certificate;
  std::size_t failed_element = 0;
  std::size_t failed_summand = 0;
};

/// Group elements act on row vectors: g . e_i = sum_j a_ij e_j.  Throws NotUnimodular.
ATypeResult verify_a_type(const FiniteMatrixGroup& g, const ATypeDecomposition& d);
/// Independent re-check of a certificate against the group and decomposition.
bool check_a_type_certificate(const FiniteMatrixGroup& g, const ATypeDecomposition& d, const ATypeCertificate& cert);

struct CoordinateSearchResult {
  bool found = false;
  std::vector<std::vector<std::size_t>> partition;
  ATypeDecomposition decomposition;
  ATypeCertificate certificate;
};

/*
 * Tries every set partition of the coordinates, finest first (more blocks
 * first, then restricted-growth order).  A negative answer only means no
 * coordinate-aligned decomposition exists.  Throws DimensionTooLarge for n > 8.
 */
CoordinateSearchResult find_a_type_coordinate(const FiniteMatrixGroup& g);

/// All set partitions of {0..n-1} in the search order above.
std::vector<std::vector<std::vector<std::size_t>>> coordinate_partitions(std::size_t n);

// ---------------------------------------------------------------------------

struct DiagonalizationResult {
  bool ok = false;
  /// Columns are common eigenvectors; T^-1 g T is diagonal when ok.
  IntMatrix conjugator;
  /// [Z^n : sum of eigenlattices] on failure; 0 when the sum has lower rank.
  BigInt index;
  /// Joint eigenvalues on the generators, one vector per eigenlattice.
  std::vector<std::vector<CycElement>> characters;
};

/// Throws NotAbelian.
DiagonalizationResult simultaneous_diagonalize_over_Z(const FiniteMatrixGroup& g);

struct SemiInvariantFactorization {
  bool ok = false;
  std::vector<CycElement> zetas;
  /// zetas[i] = zeta_{root_order}^exponents[i].
  std::vector<long> exponents;
  IntMatrix q;
  std::size_t failed_row = 0;
  std::string reason;
};

/*
 * Writes A = diag(zeta_1..zeta_n) Q with roots of unity zeta_i in `k_ab` and
 * Q in GL_n(Z), normalized so the first nonzero entry of each row of Q is
 * positive.  Throws NotIntegral / NotInvertible.
 */
SemiInvariantFactorization factor_semi_invariant(const CycMatrix& a, const SubfieldHandle& k_ab);

}  // namespace galstab
