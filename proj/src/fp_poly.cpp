#include "galstab/fp_poly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "galstab/errors.hpp"

namespace galstab::fp {

namespace {

long mulmod(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

std::vector<std::uint64_t> to_words(const mpz_class& z) {
  std::vector<std::uint64_t> words;
  mpz_class t = z;
  while (t > 0) {
    mpz_class low = t & mpz_class("18446744073709551615");
    std::uint64_t w = 0;
    mpz_export(&w, nullptr, -1, sizeof(w), 0, 0, low.get_mpz_t());
    words.push_back(w);
    t >>= 64;
  }
  return words;
}

void equal_degree_split(const Poly& g, long d, long p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  const auto half = to_words((pd - 1) / 2);
  while (true) {
    Poly a(static_cast<std::size_t>(degree(g)));
    for (auto& c : a) c = static_cast<long>(rng() % static_cast<std::uint64_t>(p));
    a = trim(a);
    if (degree(a) < 1) continue;
    Poly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Poly term = mod(a, g, p);
      b = term;
      for (long i = 1; i < d; ++i) {
        term = mod(mul(term, term, p), g, p);
        b = add(b, term, p);
      }
    } else {
      b = sub(powmod(a, half, g, p), Poly{1}, p);
    }
    Poly h = gcd(b, g, p);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(div(g, h, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly reduce(const std::vector<long>& f, long p) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = ((f[i] % p) + p) % p;
  return trim(out);
}

Poly add(const Poly& f, const Poly& g, long p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + g[i]) % p;
  return trim(out);
}

Poly sub(const Poly& f, const Poly& g, long p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = ((out[i] - g[i]) % p + p) % p;
  return trim(out);
}

Poly mul(const Poly& f, const Poly& g, long p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + mulmod(f[i], g[j], p)) % p;
  return trim(out);
}

long inverse_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    t = t - q * nt;
    std::swap(t, nt);
    r = r - q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw Error(ErrorKind::NotAUnit, std::to_string(a) + " mod " + std::to_string(p));
  return t < 0 ? t + p : t;
}

namespace {

void divmod(const Poly& f, const Poly& g, long p, Poly& q, Poly& r) {
  if (g.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  r = f;
  q.assign(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
  const long lead_inv = inverse_mod(g.back(), p);
  while (r.size() >= g.size() && !r.empty()) {
    const std::size_t shift = r.size() - g.size();
    const long c = mulmod(r.back(), lead_inv, p);
    q[shift] = c;
    for (std::size_t j = 0; j < g.size(); ++j) r[shift + j] = ((r[shift + j] - mulmod(c, g[j], p)) % p + p) % p;
    r = trim(r);
  }
  q = trim(q);
}

}  // namespace

Poly mod(const Poly& f, const Poly& g, long p) {
  Poly q, r;
  divmod(f, g, p, q, r);
  return r;
}

Poly div(const Poly& f, const Poly& g, long p) {
  Poly q, r;
  divmod(f, g, p, q, r);
  return q;
}

Poly monic(const Poly& f, long p) {
  if (f.empty()) return f;
  const long inv = inverse_mod(f.back(), p);
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mulmod(f[i], inv, p);
  return out;
}

Poly gcd(Poly f, Poly g, long p) {
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f, p);
}

Poly powmod(const Poly& base, const std::vector<std::uint64_t>& e, const Poly& f, long p) {
  Poly result{1};
  result = mod(result, f, p);
  Poly b = mod(base, f, p);
  for (std::uint64_t word : e) {
    for (int bit = 0; bit < 64; ++bit) {
      if (word & 1) result = mod(mul(result, b, p), f, p);
      word >>= 1;
      b = mod(mul(b, b, p), f, p);
    }
  }
  return result;
}

std::vector<Poly> factor_squarefree(const Poly& input, long p, std::uint64_t seed) {
  if (input.empty()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  Poly f = monic(input, p);
  std::vector<Poly> factors;
  std::mt19937_64 rng(seed);
  const Poly x{0, 1};
  Poly h = mod(x, f, p);
  const std::vector<std::uint64_t> pw{static_cast<std::uint64_t>(p)};
  for (long d = 1; degree(f) >= 2 * d; ++d) {
    h = powmod(h, pw, f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (degree(g) > 0) {
      equal_degree_split(g, d, p, rng, factors);
      f = div(f, g, p);
      h = mod(h, f, p);
    }
  }
  if (degree(f) > 0) factors.push_back(f);
  std::sort(factors.begin(), factors.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return factors;
}

}  // namespace galstab::fp
