#include "galstab/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace galstab {

long euler_phi(long m) {
  long result = m;
  long n = m;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long multiplicative_order(long a, long m) {
  if (m == 1) return 1;
  a = mod_floor(a, m);
  if (std::gcd(a, m) != 1) throw Error(ErrorKind::NotAUnit, std::to_string(a) + " mod " + std::to_string(m));
  long k = 1;
  long x = a;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

std::vector<long> unit_group(long m) {
  if (m == 1) return {1};
  std::vector<long> out;
  for (long a = 1; a < m; ++a)
    if (std::gcd(a, m) == 1) out.push_back(a);
  return out;
}

namespace {

// Exact quotient of integer polynomials by a monic divisor.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(long m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  std::vector<long> poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const CyclotomicField::Data> CyclotomicField::lookup(long m) {
  static std::mutex mutex;
  static std::map<long, std::shared_ptr<const Data>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  auto data = std::make_shared<Data>();
  data->m = m;
  data->modulus = cyclotomic_polynomial(m);
  data->phi = static_cast<long>(data->modulus.size()) - 1;
  data->units = unit_group(m);

  const std::size_t phi = static_cast<std::size_t>(data->phi);
  const std::size_t span = std::max<std::size_t>(static_cast<std::size_t>(m), 2 * phi - 1);
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (std::size_t k = 0; k < span; ++k) {
    data->powers.push_back(cur);
    // multiply by x and reduce with the monic modulus
    long top = cur[phi - 1];
    for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1] - top * data->modulus[j];
    cur[0] = -top * data->modulus[0];
  }
  cache.emplace(m, data);
  return data;
}

CyclotomicField::CyclotomicField(long m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  data_ = lookup(m);
}

// ---------------------------------------------------------------------------

CycElement::CycElement(const CyclotomicField& field)
    : field_(field), num_(static_cast<std::size_t>(field.degree())), den_(1) {}

CycElement CycElement::one(const CyclotomicField& field) { return from_integer(field, 1); }

CycElement CycElement::from_integer(const CyclotomicField& field, const BigInt& value) {
  CycElement x(field);
  x.num_[0] = value;
  return x;
}

CycElement CycElement::from_rational(const CyclotomicField& field, const BigRational& value) {
  CycElement x(field);
  x.num_[0] = value.get_num();
  x.den_ = value.get_den();
  return x;
}

CycElement CycElement::zeta_power(const CyclotomicField& field, long k) {
  const auto& coords = field.power_coords(static_cast<std::size_t>(mod_floor(k, field.conductor())));
  CycElement x(field);
  for (std::size_t i = 0; i < coords.size(); ++i) x.num_[i] = coords[i];
  return x;
}

CycElement CycElement::root_of_unity(const CyclotomicField& field, long k) {
  const long m = field.conductor();
  if (m % 2 == 0) return zeta_power(field, k);
  const long r = mod_floor(k, 2 * m);
  CycElement x = zeta_power(field, r * ((m + 1) / 2));
  return r % 2 == 0 ? x : -x;
}

CycElement CycElement::reduce_raw(const CyclotomicField& field, std::vector<BigInt> raw, BigInt den) {
  CycElement out(field);
  const std::size_t phi = static_cast<std::size_t>(field.degree());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    if (k < phi) {
      out.num_[k] += raw[k];
      continue;
    }
    const auto& coords = field.power_coords(k);
    for (std::size_t j = 0; j < phi; ++j)
      if (coords[j] != 0) out.num_[j] += raw[k] * coords[j];
  }
  out.den_ = std::move(den);
  out.normalize();
  return out;
}

CycElement CycElement::from_polynomial(const CyclotomicField& field, std::span<const BigRational> coeffs) {
  BigInt den = 1;
  for (const auto& c : coeffs) den = lcm(den, BigInt(c.get_den()));
  // Exponents beyond the reduction table are folded using zeta^m = 1.
  const std::size_t m = static_cast<std::size_t>(field.conductor());
  const std::size_t span = field.reduction_span();
  std::vector<BigInt> raw(span);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::size_t e = k < span ? k : k % m;
    raw[e] += BigInt(coeffs[k].get_num() * (den / coeffs[k].get_den()));
  }
  return reduce_raw(field, std::move(raw), std::move(den));
}

void CycElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  BigInt g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycElement::require_same_field(const CycElement& other) const {
  if (!(field_ == other.field_))
    throw Error(ErrorKind::FieldMismatch, "conductors " + std::to_string(field_.conductor()) + " and " +
                                              std::to_string(other.field_.conductor()));
}

BigRational CycElement::coeff(std::size_t i) const {
  BigRational q(num_[i], den_);
  q.canonicalize();
  return q;
}

std::vector<BigRational> CycElement::coeffs() const {
  std::vector<BigRational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const BigInt& c) { return c == 0; });
}

bool CycElement::is_one() const { return den_ == 1 && num_[0] == 1 && is_rational(); }

bool CycElement::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const BigInt& c) { return c == 0; });
}

BigRational CycElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "element is not rational: " + to_string());
  return coeff(0);
}

CycElement CycElement::operator-() const {
  CycElement out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycElement& CycElement::operator+=(const CycElement& rhs) {
  require_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycElement& CycElement::operator-=(const CycElement& rhs) { return *this += -rhs; }

CycElement operator*(const CycElement& lhs, const CycElement& rhs) {
  lhs.require_same_field(rhs);
  const std::size_t phi = lhs.num_.size();
  std::vector<BigInt> raw(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (lhs.num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (rhs.num_[j] != 0) mpz_addmul(raw[i + j].get_mpz_t(), lhs.num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
  }
  return CycElement::reduce_raw(lhs.field_, std::move(raw), lhs.den_ * rhs.den_);
}

CycElement& CycElement::operator*=(const CycElement& rhs) { return *this = *this * rhs; }

CycElement& CycElement::operator*=(const BigRational& rhs) {
  for (auto& c : num_) c *= rhs.get_num();
  den_ *= rhs.get_den();
  normalize();
  return *this;
}

CycElement CycElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return from_rational(field_, 1 / rational_value());
  // x * prod_{a != 1} sigma_a(x) = N(x)
  CycElement cofactor = one(field_);
  for (long a : field_.units())
    if (a != 1) cofactor *= galois(a);
  BigRational n = (*this * cofactor).rational_value();
  return cofactor * BigRational(1 / n);
}

CycElement CycElement::galois(long a) const {
  const long m = field_.conductor();
  a = mod_floor(a, m);
  if (std::gcd(a, m) != 1 && m != 1)
    throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not a unit mod " + std::to_string(m));
  std::vector<BigInt> raw(static_cast<std::size_t>(std::max<long>(m, 1)));
  for (std::size_t k = 0; k < num_.size(); ++k)
    if (num_[k] != 0) raw[static_cast<std::size_t>(mod_floor(a * static_cast<long>(k), m))] += num_[k];
  return reduce_raw(field_, std::move(raw), den_);
}

CycElement CycElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycElement result = one(field_);
  CycElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool CycElement::operator==(const CycElement& other) const {
  return field_ == other.field_ && den_ == other.den_ && num_ == other.num_;
}

int CycElement::compare(const CycElement& other) const {
  for (std::size_t i = 0; i < num_.size() && i < other.num_.size(); ++i) {
    int c = cmp(num_[i] * other.den_, other.num_[i] * den_);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (num_.size() != other.num_.size()) return num_.size() < other.num_.size() ? -1 : 1;
  return 0;
}

namespace {

std::size_t hash_mpz(const BigInt& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i)
    h = h * 0x100000001b3ULL ^ static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i)));
  return h;
}

}  // namespace

std::size_t CycElement::hash() const {
  std::size_t h = hash_mpz(den_);
  for (const auto& c : num_) h = (h ^ hash_mpz(c)) * 0x9e3779b97f4a7c15ULL;
  return h;
}

std::string CycElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  os << '(';
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    if (!first) os << (num_[i] > 0 ? " + " : " - ");
    else if (num_[i] < 0) os << '-';
    BigInt a = abs(num_[i]);
    if (i == 0 || a != 1) os << a;
    if (i > 0) os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << '0';
  os << ')';
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycElement& x) { return os << x.to_string(); }

CycElement elem_arith(ArithOp op, const CycElement& x, const CycElement* y) {
  if (op != ArithOp::Inv && y == nullptr) throw Error(ErrorKind::InvalidArgument, "binary operation needs two operands");
  switch (op) {
    case ArithOp::Add: return x + *y;
    case ArithOp::Sub: return x - *y;
    case ArithOp::Mul: return x * *y;
    case ArithOp::Inv: return x.inverse();
  }
  return x;
}

// ---------------------------------------------------------------------------

GaloisElement::GaloisElement(const CyclotomicField& field, long a) : field_(field) {
  const long m = field.conductor();
  a_ = m == 1 ? 1 : mod_floor(a, m);
  if (m != 1 && std::gcd(a_, m) != 1)
    throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not a unit mod " + std::to_string(m));
}

GaloisElement GaloisElement::compose(const GaloisElement& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "Galois elements of different fields");
  return GaloisElement(field_, a_ * other.a_);
}

CycElement galois_apply(const GaloisElement& g, const CycElement& x) {
  if (!(g.field() == x.field())) throw Error(ErrorKind::FieldMismatch, "Galois element and operand");
  return g.apply(x);
}

BigRational norm(const CycElement& x) {
  CycElement prod = CycElement::one(x.field());
  for (long a : x.field().units()) prod *= x.galois(a);
  return prod.rational_value();
}

// ---------------------------------------------------------------------------

SubfieldHandle::SubfieldHandle(const CyclotomicField& field, std::span<const long> generators) : field_(field) {
  const long m = field.conductor();
  std::set<long> group{1};
  std::vector<long> frontier{1};
  std::vector<long> gens;
  for (long g : generators) {
    long r = m == 1 ? 1 : mod_floor(g, m);
    if (m != 1 && std::gcd(r, m) != 1) throw Error(ErrorKind::NotAUnit, std::to_string(g) + " mod " + std::to_string(m));
    gens.push_back(r);
  }
  while (!frontier.empty()) {
    long x = frontier.back();
    frontier.pop_back();
    for (long g : gens) {
      long y = m == 1 ? 1 : x * g % m;
      if (group.insert(y).second) frontier.push_back(y);
    }
  }
  fixing_.assign(group.begin(), group.end());
}

SubfieldHandle SubfieldHandle::rationals(const CyclotomicField& field) {
  return SubfieldHandle(field, field.units());
}

SubfieldHandle SubfieldHandle::whole(const CyclotomicField& field) { return SubfieldHandle(field, {}); }

SubfieldHandle SubfieldHandle::cyclotomic_subfield(const CyclotomicField& field, long d) {
  const long m = field.conductor();
  if (d < 1 || m % d != 0)
    throw Error(ErrorKind::NotSubfield, "Q(zeta_" + std::to_string(d) + ") is not inside Q(zeta_" + std::to_string(m) + ")");
  std::vector<long> h;
  for (long a : field.units())
    if (a % d == 1 % d) h.push_back(a);
  return SubfieldHandle(field, h);
}

long SubfieldHandle::degree() const { return field_.degree() / static_cast<long>(fixing_.size()); }

bool SubfieldHandle::fixes(long a) const {
  const long m = field_.conductor();
  return std::binary_search(fixing_.begin(), fixing_.end(), m == 1 ? 1 : mod_floor(a, m));
}

bool SubfieldHandle::contains(const CycElement& x) const {
  if (!(x.field() == field_)) throw Error(ErrorKind::FieldMismatch, "subfield membership");
  return std::all_of(fixing_.begin(), fixing_.end(), [&](long a) { return x.galois(a) == x; });
}

bool SubfieldHandle::is_subfield_of(const SubfieldHandle& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "subfield comparison");
  return std::includes(fixing_.begin(), fixing_.end(), other.fixing_.begin(), other.fixing_.end());
}

long SubfieldHandle::conductor() const {
  const long m = field_.conductor();
  for (long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    if (SubfieldHandle(*this).is_subfield_of(cyclotomic_subfield(field_, d))) return d;
  }
  return m;
}

SubfieldHandle minimal_subfield(const CycElement& x) {
  std::vector<long> stab;
  for (long a : x.field().units())
    if (x.galois(a) == x) stab.push_back(a);
  return SubfieldHandle(x.field(), stab);
}

CycElement embed(const CycElement& x, const CyclotomicField& target) {
  const long m = x.field().conductor();
  const long mt = target.conductor();
  if (mt % m != 0)
    throw Error(ErrorKind::FieldMismatch, "cannot embed Q(zeta_" + std::to_string(m) + ") into Q(zeta_" + std::to_string(mt) + ")");
  const long step = mt / m;
  CycElement out(target);
  for (std::size_t k = 0; k < x.numerators().size(); ++k) {
    if (x.numerators()[k] == 0) continue;
    out += CycElement::zeta_power(target, static_cast<long>(k) * step) * BigRational(x.coeff(k));
  }
  return out;
}

SubfieldHandle embed(const SubfieldHandle& k, const CyclotomicField& target) {
  const long m = k.field().conductor();
  if (target.conductor() % m != 0) throw Error(ErrorKind::FieldMismatch, "subfield embedding needs m | m'");
  std::vector<long> h;
  for (long a : target.units())
    if (k.fixes(a)) h.push_back(a);
  return SubfieldHandle(target, h);
}

CycElement primitive_element(const SubfieldHandle& k) {
  const CyclotomicField& field = k.field();
  if (k.degree() == 1) return CycElement::one(field);
  const long m = field.conductor();
  std::vector<CycElement> periods;
  for (long e = 1; e < m; ++e) {
    CycElement eta(field);
    for (long h : k.fixing_subgroup()) eta += CycElement::zeta_power(field, e * h);
    if (minimal_subfield(eta) == k) return eta;
    periods.push_back(std::move(eta));
  }
  for (long c = 1; c <= 3; ++c)
    for (std::size_t i = 0; i < periods.size(); ++i)
      for (std::size_t j = i + 1; j < periods.size(); ++j) {
        CycElement x = periods[i] + periods[j] * BigRational(c);
        if (minimal_subfield(x) == k) return x;
      }
  throw Error(ErrorKind::InvalidArgument, "no primitive element found among Gaussian period combinations");
}

}  // namespace galstab
