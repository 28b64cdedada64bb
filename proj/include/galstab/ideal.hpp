#pragma once

#include <compare>
#include <climits>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "galstab/cyclotomic.hpp"
#include "galstab/intmat.hpp"

namespace galstab {

/// A congruence level: a non-negative integer or infinity (for 0 and for the identity).
class Level {
public:
  constexpr Level() = default;
  constexpr explicit Level(int v) : value_(v) {}
  static constexpr Level infinity() { return Level(INT_MAX); }

  constexpr bool is_infinite() const { return value_ == INT_MAX; }
  constexpr int value() const { return value_; }
  constexpr auto operator<=>(const Level&) const = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

private:
  int value_ = 0;
};

/*
 * An integral ideal of Z[zeta_m] as a full-rank sublattice of Z^phi in the
 * power basis.  The basis is kept in Hermite normal form, so equality of
 * ideals is equality of bases.
 */
class IdealHNF {
public:
  IdealHNF(const CyclotomicField& field, IntMatrix basis);

  static IdealHNF unit(const CyclotomicField& field);
  /// Ideal generated by integral elements; `multiple` must be a nonzero rational integer in the ideal.
  static IdealHNF from_generators(const CyclotomicField& field, const std::vector<CycElement>& gens,
                                  const BigInt& multiple);
  static IdealHNF principal(const CycElement& x);

  const CyclotomicField& field() const { return field_; }
  const IntMatrix& basis() const { return basis_; }
  /// Index [Z[zeta] : I], the product of the HNF pivots.
  BigInt norm() const;
  bool is_unit() const;
  bool contains(const CycElement& x) const;
  /// Basis rows as field elements.
  std::vector<CycElement> basis_elements() const;

  bool operator==(const IdealHNF& other) const { return field_ == other.field_ && basis_ == other.basis_; }

private:
  CyclotomicField field_;
  IntMatrix basis_;
};

IdealHNF ideal_multiply(const IdealHNF& a, const IdealHNF& b);
bool ideal_contains(const IdealHNF& ideal, const CycElement& x);

/*
 * A prime of Z[zeta_m] over p, (p, g(zeta)) for an irreducible factor g of
 * Phi_m mod p.  Powers are computed on demand and cached; the cache is
 * internally synchronized, so a PrimeIdeal may be shared across threads.
 */
class PrimeIdeal {
public:
  PrimeIdeal(const CyclotomicField& field, long p, std::vector<long> gen_poly, long e, long f_res);

  const CyclotomicField& field() const { return field_; }
  long p() const { return p_; }
  const std::vector<long>& gen_poly() const { return gen_poly_; }
  /// Ramification index.
  long e() const { return e_; }
  /// Residue degree.
  long f_res() const { return f_res_; }
  const IdealHNF& hnf() const { return power(1); }
  /// beta^k for k >= 1 (k = 0 gives the unit ideal).
  const IdealHNF& power(int k) const;

private:
  struct PowerTable {
    std::mutex mutex;
    std::vector<std::unique_ptr<IdealHNF>> powers;
  };

  CyclotomicField field_;
  long p_;
  std::vector<long> gen_poly_;
  long e_;
  long f_res_;
  std::vector<CycElement> generators_;
  std::shared_ptr<PowerTable> table_;
};

/// All primes over p (p must be prime), sorted by generating polynomial.
std::vector<PrimeIdeal> decompose_prime(const CyclotomicField& field, long p);

inline constexpr int kDefaultLevelCap = 16;

/// max k <= cap with x in beta^k; infinity for x = 0.  Throws NotIntegral.
Level element_level(const PrimeIdeal& beta, const CycElement& x, int cap = kDefaultLevelCap);

}  // namespace galstab
