#include "galstab/constructions.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <thread>
#include <unordered_set>

namespace galstab {

namespace {

std::vector<long> coset_representatives(const SubfieldHandle& l, const SubfieldHandle& k) {
  const long m = l.field().conductor();
  const auto& hl = l.fixing_subgroup();
  std::vector<long> reps;
  std::vector<bool> covered(static_cast<std::size_t>(m), false);
  for (long a : k.fixing_subgroup()) {
    if (covered[static_cast<std::size_t>(a)]) continue;
    reps.push_back(a);
    for (long h : hl) covered[static_cast<std::size_t>(mod_floor(a * h, m))] = true;
  }
  return reps;
}

std::vector<std::size_t> permutation_of(const CycMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> perm(n);
  std::vector<bool> hit(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, j).is_one()) {
        perm[j] = i;
        ++ones;
      } else if (!a(i, j).is_zero()) {
        throw Error(ErrorKind::NotPermutation, a.to_string());
      }
    }
    if (ones != 1 || hit[perm[j]]) throw Error(ErrorKind::NotPermutation, a.to_string());
    hit[perm[j]] = true;
  }
  return perm;
}

bool is_identity_perm(const std::vector<std::size_t>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

// p-adic decomposition of the order; s = -1 when it is not a power of p.
long p_exponent(long order, long p) {
  long s = 0;
  while (order % p == 0) {
    order /= p;
    ++s;
  }
  return order == 1 ? s : -1;
}

WitnessAudit audit_one(const TorsionWitness& w, std::size_t index, long order_cap) {
  WitnessAudit out;
  out.index = index;
  const long p = w.prime.p();
  const long e = w.prime.e();
  out.order = element_order(w.matrix, order_cap);
  out.level = matrix_level(w.matrix, w.prime, std::max<int>(kDefaultLevelCap, static_cast<int>(e) + 1));
  out.in_kernel = out.level >= Level(1);
  if (out.order == 1 || !out.in_kernel) return out;
  out.s = p_exponent(out.order, p);
  if (out.s < 0) {
    out.s = 0;
    out.pass = false;
    return out;
  }
  out.bound = minkowski_bound(p, out.s, e);
  out.pass = out.level.value() <= out.bound;
  return out;
}

std::optional<long> integer_order(const IntMatrix& a, long cap) {
  const IntMatrix id = IntMatrix::identity(a.rows());
  IntMatrix x = a;
  for (long k = 1; k <= cap; ++k) {
    if (x == id) return k;
    x = x * a;
  }
  return std::nullopt;
}

bool congruent_to_identity(const IntMatrix& a, long q) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      BigInt d = a(i, j) - (i == j ? 1 : 0);
      if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(q)) == 0) return false;
    }
  return true;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks, std::size_t n) {
  IntMatrix out(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(at + i, at + j) = b(i, j);
    at += b.rows();
  }
  return out;
}

IntMatrix companion(const std::vector<long>& poly) {
  const std::size_t d = poly.size() - 1;
  IntMatrix c(d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -poly[i];
  return c;
}

// I + c E_ij with c a root of unity times +-1; inverse I - c E_ij.
std::pair<CycMatrix, CycMatrix> random_elementary(const CyclotomicField& field, std::size_t n, std::mt19937_64& rng) {
  const std::size_t i = draw(rng, n);
  std::size_t j = draw(rng, n - 1);
  if (j >= i) ++j;
  CycElement c = CycElement::root_of_unity(field, static_cast<long>(draw(rng, static_cast<std::uint64_t>(field.root_order()))));
  CycMatrix t = CycMatrix::identity(field, n);
  CycMatrix ti = t;
  t(i, j) = c;
  ti(i, j) = -c;
  return {t, ti};
}

}  // namespace

EmbeddingMatrix embedding_matrix(const SubfieldHandle& l, const SubfieldHandle& k,
                                 const std::vector<CycElement>& basis) {
  if (!(l.field() == k.field())) throw Error(ErrorKind::FieldMismatch, "L and K live in different fields");
  if (!k.is_subfield_of(l)) throw Error(ErrorKind::NotSubfield, "K is not contained in L");
  const long n = l.degree() / k.degree();
  if (static_cast<long>(basis.size()) != n)
    throw Error(ErrorKind::NotABasis, "expected " + std::to_string(n) + " basis elements");
  for (const auto& u : basis) {
    if (!(u.field() == l.field())) throw Error(ErrorKind::FieldMismatch, "basis element field");
    if (!l.contains(u)) throw Error(ErrorKind::NotSubfield, u.to_string() + " is not in L");
  }
  EmbeddingMatrix out{CycMatrix(l.field(), basis.size()), basis, l, k, coset_representatives(l, k)};
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) out.v(i, j) = basis[j].galois(out.embeddings[i]);
  if (!out.v.try_inverse()) throw Error(ErrorKind::NotABasis, "embedding matrix is singular");
  return out;
}

std::vector<CycElement> default_basis(const SubfieldHandle& l, const SubfieldHandle& k) {
  if (!k.is_subfield_of(l)) throw Error(ErrorKind::NotSubfield, "K is not contained in L");
  const long n = l.degree() / k.degree();
  const CycElement t = primitive_element(l);
  std::vector<CycElement> basis;
  CycElement x = CycElement::one(l.field());
  for (long i = 0; i < n; ++i) {
    basis.push_back(x);
    x *= t;
  }
  return basis;
}

std::vector<std::size_t> psi(const EmbeddingMatrix& e, long a) {
  if (!e.k.fixes(a)) throw Error(ErrorKind::NotSubfield, std::to_string(a) + " does not fix K");
  return permutation_of(e.v.galois(a) * e.v.inverse());
}

PUReport build_pu(const EmbeddingMatrix& e_in, long p, long ambient_m) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (ambient_m < 1 || ambient_m % p != 0)
    throw Error(ErrorKind::ConductorTooSmall, "p = " + std::to_string(p) + " does not divide " + std::to_string(ambient_m));
  const long m = e_in.v.field().conductor();
  if (ambient_m % m != 0)
    throw Error(ErrorKind::ConductorTooSmall, std::to_string(m) + " does not divide " + std::to_string(ambient_m));

  const CyclotomicField field(ambient_m);
  EmbeddingMatrix e = e_in;
  if (ambient_m != m) {
    std::vector<CycElement> basis;
    for (const auto& u : e_in.basis) basis.push_back(embed(u, field));
    e = embedding_matrix(embed(e_in.l, field), embed(e_in.k, field), basis);
  }
  const std::size_t n = e.v.dim();
  BigInt expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  if (expected > static_cast<unsigned long>(kDefaultGroupCap))
    throw Error(ErrorKind::CapExceeded, "P_U would have " + expected.get_str() + " elements");

  const CycMatrix v_inv = e.v.inverse();
  const CycElement zeta_p = CycElement::zeta_power(field, ambient_m / p);
  std::vector<CycMatrix> w;
  std::vector<CycMatrix> gens;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<CycElement> d(n, CycElement::one(field));
    d[t] = zeta_p;
    w.push_back(CycMatrix::diagonal(d));
    gens.push_back(v_inv * w.back() * e.v);
  }

  PUReport out{close_group(field, n, gens, expected.get_ui()), p, {}, SubfieldHandle::whole(field),
               SubfieldHandle::whole(field), false, true, 0};
  if (out.group.order() != expected.get_ui())
    throw Error(ErrorKind::InvalidArgument, "P_U has unexpected order " + std::to_string(out.group.order()));

  std::vector<long> predicted;
  for (long a : e.k.fixing_subgroup()) {
    auto perm = psi(e, a);
    const CycMatrix pa = CycMatrix::permutation(field, perm);
    const CycMatrix pa_inv = pa.inverse();
    const long i = mod_floor(a, p);
    for (std::size_t t = 0; t < n; ++t) {
      const CycMatrix lhs = gens[t].galois(a);
      const CycMatrix rhs = v_inv * pa_inv * w[t].pow(i) * pa * e.v;
      out.stability_verified = out.stability_verified && lhs == rhs;
      ++out.stability_checks;
    }
    if (is_identity_perm(perm) && i == 1) predicted.push_back(a);
    out.psi_table.emplace(a, std::move(perm));
  }
  out.field_of_definition = field_of_definition(out.group, e.k);
  out.predicted_field = SubfieldHandle(field, predicted);
  out.integral = out.group.is_integral();
  return out;
}

SubfieldHandle field_of_definition(const FiniteMatrixGroup& g) {
  // Elements are products of generators, so fixing the generators suffices.
  const auto& mats = g.generators().empty() ? g.elements() : g.generators();
  std::vector<long> stab;
  for (long a : g.field().units()) {
    bool fixed = std::all_of(mats.begin(), mats.end(), [&](const CycMatrix& x) { return x.galois(a) == x; });
    if (fixed) stab.push_back(a);
  }
  return SubfieldHandle(g.field(), stab);
}

SubfieldHandle field_of_definition(const FiniteMatrixGroup& g, const SubfieldHandle& base) {
  if (!(g.field() == base.field())) throw Error(ErrorKind::FieldMismatch, "base field");
  const SubfieldHandle entrywise = field_of_definition(g);
  std::vector<long> stab;
  for (long a : entrywise.fixing_subgroup())
    if (base.fixes(a)) stab.push_back(a);
  return SubfieldHandle(g.field(), stab);
}

long minkowski_bound(long p, long s, long f) {
  if (!is_prime(p) || s < 1 || f < 1) throw Error(ErrorKind::InvalidArgument, "bound needs prime p and s, f >= 1");
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(s - 1));
  den *= p - 1;
  BigInt q = BigInt(f) / den;
  return q.get_si();
}

TorsionAuditReport torsion_level_audit(const std::vector<TorsionWitness>& witnesses, long order_cap) {
  TorsionAuditReport report;
  report.entries.resize(witnesses.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), witnesses.size()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < witnesses.size(); i += workers)
        report.entries[i] = audit_one(witnesses[i], i, order_cap);
    }));
  }
  for (auto& j : jobs) j.get();
  for (const auto& entry : report.entries) {
    report.pass = report.pass && entry.pass;
    if (entry.in_kernel && entry.order > 1 && entry.pass && entry.level.value() == entry.bound) report.sharp = true;
  }
  return report;
}

std::vector<CycMatrix> torsion_witnesses(const CyclotomicField& field, std::size_t n, std::size_t random_count,
                                         std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  std::vector<CycMatrix> structured;
  const long r = field.root_order();

  // Diagonal roots of unity with at most two nontrivial entries.
  structured.push_back(CycMatrix::identity(field, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (long a = 0; a < r; ++a)
        for (long b = 0; b < r; ++b) {
          if (a == 0 || (i == j && b != 0)) continue;
          std::vector<CycElement> d(n, CycElement::one(field));
          d[i] = CycElement::root_of_unity(field, a);
          if (j != i) d[j] = CycElement::root_of_unity(field, b);
          structured.push_back(CycMatrix::diagonal(d));
        }

  // Signed permutation matrices.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
      CycMatrix x = CycMatrix::permutation(field, perm);
      for (std::size_t j = 0; j < n; ++j)
        if (signs & (std::size_t{1} << j)) x(perm[j], j) = -x(perm[j], j);
      structured.push_back(x);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Companion matrices of cyclotomic polynomials that fit.
  for (long d = 1; d <= 60; ++d) {
    if (euler_phi(d) > static_cast<long>(n)) continue;
    IntMatrix c = companion(cyclotomic_polynomial(d));
    std::vector<IntMatrix> blocks{c};
    for (std::size_t k = c.rows(); k < n; ++k) blocks.push_back(IntMatrix::identity(1));
    structured.push_back(CycMatrix::from_integers(field, block_diagonal(blocks, n)));
  }

  std::vector<CycMatrix> out;
  std::unordered_set<CycMatrix> seen;
  auto add = [&](CycMatrix x) {
    if (seen.insert(x).second) out.push_back(std::move(x));
  };
  for (const auto& x : structured) add(x);

  if (n < 2) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < random_count; ++k) {
    const CycMatrix& base = structured[draw(rng, structured.size())];
    if (k % 2 == 0) {
      IntMatrix t = random_unimodular(n, rng, 4);
      CycMatrix tm = CycMatrix::from_integers(field, t);
      CycMatrix ti = CycMatrix::from_integers(field, unimodular_inverse(t));
      add(tm * base * ti);
    } else {
      CycMatrix x = base;
      for (int step = 0; step < 2; ++step) {
        auto [t, ti] = random_elementary(field, n, rng);
        x = t * x * ti;
      }
      add(std::move(x));
    }
  }
  return out;
}

Corollary1Report corollary1_audit(int n, int trial_count, std::uint64_t seed) {
  if (n < 1 || n > 4) throw Error(ErrorKind::InvalidArgument, "corollary audit needs 1 <= n <= 4");
  if (trial_count < 0) throw Error(ErrorKind::InvalidArgument, "negative trial count");
  const std::vector<IntMatrix> small{IntMatrix{{1}}, IntMatrix{{-1}}};
  const std::vector<IntMatrix> large{
      IntMatrix{{0, -1}, {1, -1}},  // order 3
      IntMatrix{{0, -1}, {1, 0}},   // order 4
      IntMatrix{{0, -1}, {1, 1}},   // order 6
      IntMatrix{{0, 1}, {1, 0}},    // order 2
  };
  Corollary1Report report;
  report.n = n;
  report.trials = trial_count;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  const std::size_t dim = static_cast<std::size_t>(n);
  for (int trial = 0; trial < trial_count; ++trial) {
    std::vector<IntMatrix> blocks;
    std::size_t used = 0;
    while (used < dim) {
      const bool two = dim - used >= 2 && draw(rng, 2) == 1;
      const auto& pool = two ? large : small;
      blocks.push_back(pool[draw(rng, pool.size())]);
      used += blocks.back().rows();
    }
    IntMatrix w = block_diagonal(blocks, dim);
    if (w == IntMatrix::identity(dim)) w(0, 0) = -1;
    const IntMatrix t = random_unimodular(dim, rng);
    const IntMatrix x = t * w * unimodular_inverse(t);
    const auto order = integer_order(x, 12);
    if (!order) {
      ++report.violations;
      report.orders.push_back(0);
      continue;
    }
    report.orders.push_back(static_cast<int>(*order));
    if (congruent_to_identity(x, 3)) {
      ++report.congruent_mod3;
      ++report.violations;
    }
    if (congruent_to_identity(x, 4)) {
      ++report.congruent_mod4;
      ++report.violations;
    }
    if (congruent_to_identity(x, 2)) {
      ++report.congruent_mod2;
      if (*order > 2) ++report.violations;
    }
  }
  report.pass = report.violations == 0;
  return report;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps) {
  IntMatrix t = IntMatrix::identity(n);
  if (n < 2) {
    if (draw(rng, 2)) t(0, 0) = -1;
    return t;
  }
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = draw(rng, n);
    std::size_t j = draw(rng, n - 1);
    if (j >= i) ++j;
    switch (draw(rng, 4)) {
      case 0:
      case 1: {
        long c = static_cast<long>(draw(rng, 4));
        c = c < 2 ? c - 2 : c - 1;  // -2, -1, 1, 2
        for (std::size_t k = 0; k < n; ++k) t(i, k) += c * t(j, k);
        break;
      }
      case 2:
        for (std::size_t k = 0; k < n; ++k) std::swap(t(i, k), t(j, k));
        break;
      default:
        for (std::size_t k = 0; k < n; ++k) t(i, k) = -t(i, k);
        break;
    }
  }
  return t;
}

}  // namespace galstab
