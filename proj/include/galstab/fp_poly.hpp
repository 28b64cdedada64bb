#pragma once

#include <cstdint>
#include <vector>

namespace galstab::fp {

/// Polynomial over F_p, constant term first, no trailing zeros (zero = empty).
using Poly = std::vector<long>;

Poly trim(Poly f);
Poly reduce(const std::vector<long>& f, long p);
Poly add(const Poly& f, const Poly& g, long p);
Poly sub(const Poly& f, const Poly& g, long p);
Poly mul(const Poly& f, const Poly& g, long p);
/// Remainder of f modulo a nonzero g.
Poly mod(const Poly& f, const Poly& g, long p);
Poly div(const Poly& f, const Poly& g, long p);
Poly monic(const Poly& f, long p);
Poly gcd(Poly f, Poly g, long p);
long inverse_mod(long a, long p);
/// base^e mod f, e given as little-endian 64-bit words.
Poly powmod(const Poly& base, const std::vector<std::uint64_t>& e, const Poly& f, long p);

/*
 * Factorization of a squarefree monic polynomial: distinct-degree split,
 * then Cantor-Zassenhaus equal-degree split driven by a fixed-seed
 * generator so repeated runs give identical output.  Factors are monic and
 * sorted (by degree, then lexicographically on coefficients from the top).
 */
std::vector<Poly> factor_squarefree(const Poly& f, long p, std::uint64_t seed = 0x5eed);

}  // namespace galstab::fp
