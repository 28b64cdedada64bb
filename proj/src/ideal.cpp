#include "galstab/ideal.hpp"

#include "galstab/fp_poly.hpp"

namespace galstab {

namespace {

std::vector<BigInt> integral_coords(const CycElement& x) {
  if (!x.is_integral()) throw Error(ErrorKind::NotIntegral, x.to_string());
  return x.numerators();
}

IdealHNF lattice_from_elements(const CyclotomicField& field, const std::vector<CycElement>& elems,
                               const BigInt& multiple) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(elems.size());
  for (const auto& e : elems) rows.push_back(integral_coords(e));
  return IdealHNF(field, hermite_normal_form_full(rows, static_cast<std::size_t>(field.degree()), multiple));
}

}  // namespace

IdealHNF::IdealHNF(const CyclotomicField& field, IntMatrix basis) : field_(field), basis_(std::move(basis)) {
  const auto phi = static_cast<std::size_t>(field.degree());
  if (basis_.rows() != phi || basis_.cols() != phi)
    throw Error(ErrorKind::InvalidArgument, "ideal basis must be phi x phi");
}

IdealHNF IdealHNF::unit(const CyclotomicField& field) {
  return IdealHNF(field, IntMatrix::identity(static_cast<std::size_t>(field.degree())));
}

IdealHNF IdealHNF::from_generators(const CyclotomicField& field, const std::vector<CycElement>& gens,
                                   const BigInt& multiple) {
  std::vector<CycElement> elems;
  for (const auto& g : gens) {
    if (!(g.field() == field)) throw Error(ErrorKind::FieldMismatch, "ideal generator");
    for (long k = 0; k < field.degree(); ++k) elems.push_back(g * CycElement::zeta_power(field, k));
  }
  return lattice_from_elements(field, elems, multiple);
}

IdealHNF IdealHNF::principal(const CycElement& x) {
  if (x.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero ideal has no full-rank basis");
  BigRational n = galstab::norm(x);
  if (n.get_den() != 1) throw Error(ErrorKind::NotIntegral, x.to_string());
  return from_generators(x.field(), {x}, n.get_num());
}

BigInt IdealHNF::norm() const {
  BigInt n = 1;
  for (std::size_t i = 0; i < basis_.rows(); ++i) n *= basis_(i, i);
  return n;
}

bool IdealHNF::is_unit() const { return norm() == 1; }

bool IdealHNF::contains(const CycElement& x) const {
  if (!(x.field() == field_)) throw Error(ErrorKind::FieldMismatch, "ideal membership");
  std::vector<BigInt> v = integral_coords(x);
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    if (!mpz_divisible_p(v[i].get_mpz_t(), basis_(i, i).get_mpz_t())) return false;
    BigInt q = v[i] / basis_(i, i);
    for (std::size_t j = i; j < n; ++j) mpz_submul(v[j].get_mpz_t(), q.get_mpz_t(), basis_(i, j).get_mpz_t());
  }
  return true;
}

std::vector<CycElement> IdealHNF::basis_elements() const {
  std::vector<CycElement> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::vector<BigRational> c;
    for (std::size_t j = 0; j < basis_.cols(); ++j) c.emplace_back(basis_(i, j));
    out.push_back(CycElement::from_polynomial(field_, c));
  }
  return out;
}

IdealHNF ideal_multiply(const IdealHNF& a, const IdealHNF& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "ideal product");
  const auto ea = a.basis_elements();
  const auto eb = b.basis_elements();
  std::vector<CycElement> prods;
  prods.reserve(ea.size() * eb.size());
  for (const auto& x : ea)
    for (const auto& y : eb) prods.push_back(x * y);
  return lattice_from_elements(a.field(), prods, a.norm() * b.norm());
}

bool ideal_contains(const IdealHNF& ideal, const CycElement& x) { return ideal.contains(x); }

// ---------------------------------------------------------------------------

PrimeIdeal::PrimeIdeal(const CyclotomicField& field, long p, std::vector<long> gen_poly, long e, long f_res)
    : field_(field), p_(p), gen_poly_(std::move(gen_poly)), e_(e), f_res_(f_res),
      table_(std::make_shared<PowerTable>()) {
  std::vector<BigRational> g(gen_poly_.begin(), gen_poly_.end());
  generators_ = {CycElement::from_integer(field, p), CycElement::from_polynomial(field, g)};
  table_->powers.push_back(std::make_unique<IdealHNF>(IdealHNF::unit(field)));
  table_->powers.push_back(std::make_unique<IdealHNF>(IdealHNF::from_generators(field, generators_, p)));
}

const IdealHNF& PrimeIdeal::power(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative ideal power");
  std::lock_guard<std::mutex> lock(table_->mutex);
  auto& powers = table_->powers;
  while (static_cast<int>(powers.size()) <= k) {
    // beta^j = p * beta^(j-1) + g(zeta) * beta^(j-1), and p^j lies in beta^j
    const int j = static_cast<int>(powers.size());
    std::vector<CycElement> elems;
    for (const auto& y : powers.back()->basis_elements())
      for (const auto& g : generators_) elems.push_back(g * y);
    BigInt multiple;
    mpz_ui_pow_ui(multiple.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(j));
    powers.push_back(std::make_unique<IdealHNF>(lattice_from_elements(field_, elems, multiple)));
  }
  return *powers[static_cast<std::size_t>(k)];
}

std::vector<PrimeIdeal> decompose_prime(const CyclotomicField& field, long p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  long m0 = field.conductor();
  long pa = 1;
  while (m0 % p == 0) {
    m0 /= p;
    pa *= p;
  }
  const long e = euler_phi(pa);
  const long f_res = multiplicative_order(p, m0);
  std::vector<PrimeIdeal> primes;
  for (auto& g : fp::factor_squarefree(fp::reduce(cyclotomic_polynomial(m0), p), p))
    primes.emplace_back(field, p, std::move(g), e, f_res);
  return primes;
}

Level element_level(const PrimeIdeal& beta, const CycElement& x, int cap) {
  if (!(x.field() == beta.field())) throw Error(ErrorKind::FieldMismatch, "element level");
  if (!x.is_integral()) throw Error(ErrorKind::NotIntegral, x.to_string());
  if (x.is_zero()) return Level::infinity();
  for (int k = 1; k <= cap; ++k)
    if (!beta.power(k).contains(x)) return Level(k - 1);
  return Level(cap);
}

}  // namespace galstab
