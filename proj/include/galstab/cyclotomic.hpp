#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "galstab/errors.hpp"

namespace galstab {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Small integer helpers shared by every module.
long euler_phi(long m);
bool is_prime(long p);
long mod_floor(long a, long m);
long lcm_long(long a, long b);
/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
long multiplicative_order(long a, long m);
/// Sorted list of residues a in [1, m) (or {1} for m = 1) coprime to m.
std::vector<long> unit_group(long m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(long m);

/*
 * The field Q(zeta_m).  Handles are cheap to copy; the underlying data
 * (modulus, reduction table, unit group) is built once per conductor and
 * shared read-only.
 */
class CyclotomicField {
public:
  explicit CyclotomicField(long m);

  long conductor() const { return data_->m; }
  long degree() const { return data_->phi; }
  const std::vector<long>& modulus() const { return data_->modulus; }
  const std::vector<long>& units() const { return data_->units; }
  /// Number of roots of unity in the field, lcm(2, m).
  long root_order() const { return lcm_long(2, data_->m); }

  /// Power-basis coordinates of zeta^k for 0 <= k < reduction_span().
  const std::vector<long>& power_coords(std::size_t k) const { return data_->powers[k]; }
  std::size_t reduction_span() const { return data_->powers.size(); }

  bool operator==(const CyclotomicField& other) const { return data_->m == other.data_->m; }

private:
  struct Data {
    long m = 1;
    long phi = 1;
    std::vector<long> modulus;
    std::vector<long> units;
    std::vector<std::vector<long>> powers;
  };
  std::shared_ptr<const Data> data_;

  static std::shared_ptr<const Data> lookup(long m);
};

/*
 * An element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi-1).
 * Stored as an integer numerator vector over one positive common
 * denominator with gcd(content, den) = 1, which makes the representation
 * unique; coeff(i) exposes the reduced rational coordinate.
 */
class CycElement {
public:
  explicit CycElement(const CyclotomicField& field);

  static CycElement zero(const CyclotomicField& field) { return CycElement(field); }
  static CycElement one(const CyclotomicField& field);
  static CycElement from_integer(const CyclotomicField& field, const BigInt& value);
  static CycElement from_rational(const CyclotomicField& field, const BigRational& value);
  /// zeta_m^k for any integer k.
  static CycElement zeta_power(const CyclotomicField& field, long k);
  /// The root of unity zeta_{lcm(2,m)}^k, expressed in Q(zeta_m).
  static CycElement root_of_unity(const CyclotomicField& field, long k);
  /// Reduces an arbitrary-length polynomial in zeta modulo Phi_m.
  static CycElement from_polynomial(const CyclotomicField& field, std::span<const BigRational> coeffs);

  const CyclotomicField& field() const { return field_; }
  BigRational coeff(std::size_t i) const;
  std::vector<BigRational> coeffs() const;
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_integral() const { return den_ == 1; }
  bool is_rational() const;
  /// Requires is_rational().
  BigRational rational_value() const;

  CycElement operator-() const;
  CycElement& operator+=(const CycElement& rhs);
  CycElement& operator-=(const CycElement& rhs);
  CycElement& operator*=(const CycElement& rhs);
  CycElement& operator*=(const BigRational& rhs);
  friend CycElement operator+(CycElement lhs, const CycElement& rhs) { return lhs += rhs; }
  friend CycElement operator-(CycElement lhs, const CycElement& rhs) { return lhs -= rhs; }
  friend CycElement operator*(const CycElement& lhs, const CycElement& rhs);
  friend CycElement operator*(CycElement lhs, const BigRational& rhs) { return lhs *= rhs; }

  /// Multiplicative inverse; throws DivisionByZero on 0.
  CycElement inverse() const;
  /// Image under zeta -> zeta^a; throws NotAUnit unless gcd(a, m) = 1.
  CycElement galois(long a) const;
  CycElement pow(long e) const;

  bool operator==(const CycElement& other) const;
  /// Lexicographic order on the rational coordinate vector.
  int compare(const CycElement& other) const;
  std::size_t hash() const;

  std::string to_string() const;

private:
  CyclotomicField field_;
  std::vector<BigInt> num_;
  BigInt den_;

  void normalize();
  void require_same_field(const CycElement& other) const;
  static CycElement reduce_raw(const CyclotomicField& field, std::vector<BigInt> raw, BigInt den);
};

std::ostream& operator<<(std::ostream& os, const CycElement& x);

enum class ArithOp { Add, Sub, Mul, Inv };
/// Uniform entry point over the four field operations; y is ignored for Inv.
CycElement elem_arith(ArithOp op, const CycElement& x, const CycElement* y = nullptr);

/// Automorphism zeta -> zeta^a of Q(zeta_m).
class GaloisElement {
public:
  GaloisElement(const CyclotomicField& field, long a);

  const CyclotomicField& field() const { return field_; }
  long exponent() const { return a_; }
  GaloisElement compose(const GaloisElement& other) const;
  CycElement apply(const CycElement& x) const { return x.galois(a_); }
  /// Exponent through which the automorphism acts on p-th roots of unity.
  long cyclotomic_character(long p) const { return mod_floor(a_, p); }

private:
  CyclotomicField field_;
  long a_;
};

CycElement galois_apply(const GaloisElement& g, const CycElement& x);

/// Product of all Galois conjugates.
BigRational norm(const CycElement& x);

/*
 * A subfield of Q(zeta_m), named by the subgroup H of (Z/m)^x fixing it.
 * H is kept sorted; its degree over Q is phi(m) / |H|.
 */
class SubfieldHandle {
public:
  /// Closes `generators` under multiplication mod m.
  SubfieldHandle(const CyclotomicField& field, std::span<const long> generators);

  static SubfieldHandle rationals(const CyclotomicField& field);
  static SubfieldHandle whole(const CyclotomicField& field);
  /// Q(zeta_d) inside Q(zeta_m) for d | m.
  static SubfieldHandle cyclotomic_subfield(const CyclotomicField& field, long d);

  const CyclotomicField& field() const { return field_; }
  const std::vector<long>& fixing_subgroup() const { return fixing_; }
  long degree() const;
  bool fixes(long a) const;
  bool contains(const CycElement& x) const;
  /// True iff this field is contained in `other`.
  bool is_subfield_of(const SubfieldHandle& other) const;
  /// Smallest d | m with this field inside Q(zeta_d).
  long conductor() const;

  bool operator==(const SubfieldHandle& other) const {
    return field_ == other.field_ && fixing_ == other.fixing_;
  }

private:
  CyclotomicField field_;
  std::vector<long> fixing_;
};

/// Stabilizer {a : sigma_a(x) = x}.
SubfieldHandle minimal_subfield(const CycElement& x);

/// Image of x under Q(zeta_m) -> Q(zeta_m'), zeta_m -> zeta_m'^(m'/m), for m | m'.
CycElement embed(const CycElement& x, const CyclotomicField& target);
SubfieldHandle embed(const SubfieldHandle& k, const CyclotomicField& target);

/// An element generating the subfield over Q (a Gaussian period when possible).
CycElement primitive_element(const SubfieldHandle& k);

}  // namespace galstab

template <>
struct std::hash<galstab::CycElement> {
  std::size_t operator()(const galstab::CycElement& x) const noexcept { return x.hash(); }
};
