#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "galstab/group.hpp"
#include "galstab/ideal.hpp"
#include "galstab/intmat.hpp"
#include "galstab/matrix.hpp"

namespace galstab {

/*
 * V with V(i, j) = tau_i(u_j): rows are the embeddings of L over K (coset
 * representatives of H_K / H_L, identity first), columns the basis u_j.
 * With this orientation V^tau V^-1 is a permutation matrix.
 */
struct EmbeddingMatrix {
  CycMatrix v;
  std::vector<CycElement> basis;
  SubfieldHandle l;
  SubfieldHandle k;
  /// embeddings[i] is the exponent a with tau_i = sigma_a.
  std::vector<long> embeddings;
};

/// Throws NotSubfield (K not inside L, or basis outside L) and NotABasis.
EmbeddingMatrix embedding_matrix(const SubfieldHandle& l, const SubfieldHandle& k, const std::vector<CycElement>& basis);
/// 1, t, ..., t^(n-1) for a primitive element t of L.
std::vector<CycElement> default_basis(const SubfieldHandle& l, const SubfieldHandle& k);

/// The permutation A with V^(sigma_a) = A V, as A e_j = e_{perm[j]}.  Throws NotSubfield / NotPermutation.
std::vector<std::size_t> psi(const EmbeddingMatrix& e, long a);

struct PUReport {
  FiniteMatrixGroup group;
  long p = 0;
  std::map<long, std::vector<std::size_t>> psi_table;
  SubfieldHandle field_of_definition;
  /// Fixed field of {a fixing K : psi(a) = id, a = 1 mod p}.
  SubfieldHandle predicted_field;
  bool integral = false;
  bool stability_verified = false;
  std::size_t stability_checks = 0;
};

/*
 * V^-1 P V for P the diagonal matrices with p-th roots of unity, with the
 * transformation law of every generator checked under every exponent
 * fixing K.  Throws ConductorTooSmall unless p | ambient_m.
 */
PUReport build_pu(const EmbeddingMatrix& e, long p, long ambient_m);

/// Fixed field of the exponents fixing every entry of every element (and K, when given).
SubfieldHandle field_of_definition(const FiniteMatrixGroup& g);
SubfieldHandle field_of_definition(const FiniteMatrixGroup& g, const SubfieldHandle& base);

/// floor(f p^(1-s) / (p-1)).
long minkowski_bound(long p, long s, long f);

struct WitnessAudit {
  std::size_t index = 0;
  long order = 1;
  long s = 0;
  Level level;
  long bound = 0;
  bool in_kernel = false;
  bool pass = true;
};

struct TorsionAuditReport {
  std::vector<WitnessAudit> entries;
  bool pass = true;
  /// Some witness in the kernel attains the bound.
  bool sharp = false;
};

struct TorsionWitness {
  CycMatrix matrix;
  PrimeIdeal prime;
};

/// Order, level and bound per witness; throws CapExceeded on witnesses of order above the cap.
TorsionAuditReport torsion_level_audit(const std::vector<TorsionWitness>& witnesses, long order_cap = 1000);

/// Structured torsion elements of GL_n(Z[zeta_m]) plus `random_count` random conjugates of them.
std::vector<CycMatrix> torsion_witnesses(const CyclotomicField& field, std::size_t n, std::size_t random_count,
                                         std::uint64_t seed);

struct Corollary1Report {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int congruent_mod2 = 0;
  int congruent_mod3 = 0;
  int congruent_mod4 = 0;
  int violations = 0;
  std::vector<int> orders;
  bool pass = true;
};

/// Random torsion elements of GL_n(Z), n <= 4, checked against the congruence torsion statements.
Corollary1Report corollary1_audit(int n, int trial_count, std::uint64_t seed);

/// Uniform draw in [0, bound) that does not depend on the standard library's distributions.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);
/// Product of random elementary operations, sign flips and swaps.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 6);

}  // namespace galstab
