#pragma once

// Generators and independent oracles shared by the unit and property tests.
// Nothing here calls into the library's algorithms it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "galstab/constructions.hpp"
#include "galstab/cyclotomic.hpp"
#include "galstab/group.hpp"
#include "galstab/matrix.hpp"

namespace gt {

using namespace galstab;

inline long pick(std::mt19937& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

inline CycElement random_element(std::mt19937& rng, const CyclotomicField& f, long range = 5, bool integral = false) {
  std::vector<BigRational> c;
  for (long i = 0; i < f.degree(); ++i) {
    BigRational q(pick(rng, -range, range), integral ? 1 : pick(rng, 1, 4));
    q.canonicalize();
    c.push_back(q);
  }
  return CycElement::from_polynomial(f, c);
}

inline CycElement zeta(const CyclotomicField& f, long k) { return CycElement::zeta_power(f, k); }
inline CycElement num(const CyclotomicField& f, long v) { return CycElement::from_integer(f, v); }

inline CycMatrix mat(const CyclotomicField& f, std::vector<std::vector<CycElement>> rows) {
  CycMatrix a(f, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
  return a;
}

inline CycMatrix diag(const CyclotomicField& f, const std::vector<long>& zeta_exponents) {
  std::vector<CycElement> d;
  for (long k : zeta_exponents) d.push_back(CycElement::root_of_unity(f, k));
  return CycMatrix::diagonal(d);
}

// Random n x n matrix in GL_n(Z) from elementary moves, with its inverse tracked alongside.
inline std::pair<IntMatrix, IntMatrix> unimodular_pair(std::mt19937& rng, std::size_t n, int steps = 5) {
  IntMatrix t = IntMatrix::identity(n), ti = IntMatrix::identity(n);
  if (n == 1) return {t, ti};
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long c = pick(rng, 0, 1) ? 1 : -1;
    // t <- E t with E = I + c e_ij ; ti <- ti E^-1 (column op)
    for (std::size_t k = 0; k < n; ++k) t(i, k) += c * t(j, k);
    for (std::size_t k = 0; k < n; ++k) ti(k, j) -= c * ti(k, i);
  }
  return {t, ti};
}

// Random monomial matrix with root-of-unity entries.
inline CycMatrix random_monomial(std::mt19937& rng, const CyclotomicField& f, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  CycMatrix a(f, n);
  for (std::size_t j = 0; j < n; ++j) a(perm[j], j) = CycElement::root_of_unity(f, pick(rng, 0, f.root_order() - 1));
  return a;
}

// Naive closure: keep multiplying every pair until nothing new appears.
inline std::vector<CycMatrix> naive_closure(const std::vector<CycMatrix>& gens, std::size_t cap) {
  std::vector<CycMatrix> set{CycMatrix::identity(gens.front().field(), gens.front().dim())};
  auto has = [&](const CycMatrix& x) { return std::find(set.begin(), set.end(), x) != set.end(); };
  for (const auto& g : gens)
    if (!has(g)) set.push_back(g);
  bool grew = true;
  while (grew && set.size() <= cap) {
    grew = false;
    const std::size_t sz = set.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        CycMatrix x = set[i] * set[j];
        if (!has(x)) {
          set.push_back(std::move(x));
          grew = true;
        }
      }
  }
  return set;
}

// Complex value of x at zeta_m^k.
inline std::complex<long double> evaluate(const CycElement& x, long k) {
  const long m = x.field().conductor();
  const long double pi = std::acos(-1.0L);
  std::complex<long double> z = std::polar(1.0L, 2 * pi * static_cast<long double>(k) / static_cast<long double>(m));
  std::complex<long double> acc = 0, pw = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(x.field().degree()); ++i) {
    acc += pw * static_cast<long double>(x.coeff(i).get_d());
    pw *= z;
  }
  return acc;
}

// Phi_m by expanding prod (x - zeta^k) over primitive k in long double and rounding.
inline std::vector<long> cyclotomic_by_roots(long m) {
  const long double pi = std::acos(-1.0L);
  std::vector<std::complex<long double>> poly{1};
  for (long k = 1; k <= m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    std::complex<long double> r = std::polar(1.0L, 2 * pi * static_cast<long double>(k) / static_cast<long double>(m));
    std::vector<std::complex<long double>> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= r * poly[i];
    }
    poly = std::move(next);
  }
  std::vector<long> out;
  for (const auto& c : poly) out.push_back(std::lround(static_cast<double>(c.real())));
  return out;
}

// Polynomials over F_p, constant term first, for the brute-force factorization oracle.
using Pp = std::vector<long>;

inline Pp ptrim(Pp a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder and quotient of a by monic b.
inline std::pair<Pp, Pp> pdivmod(Pp a, const Pp& b, long p) {
  for (auto& c : a) c = ((c % p) + p) % p;
  a = ptrim(a);
  if (a.size() < b.size()) return {{}, a};
  Pp q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    long c = ((a[i] % p) + p) % p;
    if (c == 0) continue;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
  }
  return {ptrim(q), ptrim(a)};
}

// All monic irreducible polynomials over F_p of degree d, by trial division.
inline std::vector<Pp> irreducibles(long p, std::size_t d) {
  std::vector<Pp> out;
  std::vector<std::vector<Pp>> lower(d);
  for (std::size_t k = 1; k < d; ++k) lower[k] = irreducibles(p, k);
  long count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= p;
  for (long code = 0; code < count; ++code) {
    Pp f(d + 1, 0);
    long c = code;
    for (std::size_t i = 0; i < d; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[d] = 1;
    bool irreducible = true;
    for (std::size_t k = 1; k <= d / 2 && irreducible; ++k)
      for (const auto& g : lower[k])
        if (pdivmod(f, g, p).second.empty()) {
          irreducible = false;
          break;
        }
    if (irreducible) out.push_back(f);
  }
  return out;
}

}  // namespace gt
