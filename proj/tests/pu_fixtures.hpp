#pragma once

// (L, K, p) triples inside conductor 40, shared by the unit tests and the acceptance suite.

#include <string>
#include <vector>

#include "galstab/cli.hpp"
#include "galstab/constructions.hpp"

namespace gt {

struct PUFixture {
  long field_m;
  std::string l, k;
  long p;
  long ambient_m;
};

inline const std::vector<PUFixture>& pu_fixtures() {
  static const std::vector<PUFixture> fixtures{
      {4, "Q(i)", "Q", 3, 12},          {4, "Q(i)", "Q", 3, 24},          {3, "Q(zeta_3)", "Q", 5, 15},
      {4, "Q(i)", "Q", 2, 4},           {5, "fix:5:4", "Q", 5, 5},        {5, "Q(zeta_5)", "fix:5:4", 2, 10},
      {8, "Q(zeta_8)", "Q(i)", 3, 24},  {3, "Q(zeta_3)", "Q(zeta_3)", 7, 21}, {8, "fix:8:7", "Q", 3, 24},
  };
  return fixtures;
}

inline galstab::EmbeddingMatrix fixture_embedding(const PUFixture& fx) {
  const galstab::CyclotomicField f(fx.field_m);
  const auto l = galstab::cli::parse_subfield(fx.l, f), k = galstab::cli::parse_subfield(fx.k, f);
  return galstab::embedding_matrix(l, k, galstab::default_basis(l, k));
}

// Entrywise stabilizer by direct comparison of conjugates.
inline std::vector<long> entrywise_stabilizer(const galstab::FiniteMatrixGroup& g) {
  std::vector<long> out;
  for (long a : g.field().units()) {
    bool fixed = true;
    for (const auto& x : g.elements())
      if (!(x.galois(a) == x)) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(a);
  }
  return out;
}

}  // namespace gt
