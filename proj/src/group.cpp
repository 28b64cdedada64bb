#include "galstab/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace galstab {

FiniteMatrixGroup::FiniteMatrixGroup(const CyclotomicField& field, std::size_t n, std::vector<CycMatrix> generators,
                                     std::vector<CycMatrix> elements)
    : field_(field), n_(n), generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const CycMatrix& a, const CycMatrix& b) { return a.canonical_less(b); });
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const CycMatrix& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteMatrixGroup::is_abelian() const {
  const auto& gens = generators_.empty() ? elements_ : generators_;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool FiniteMatrixGroup::is_integral() const {
  return std::all_of(elements_.begin(), elements_.end(), [](const CycMatrix& a) { return a.is_integral(); });
}

bool FiniteMatrixGroup::verify_closed() const {
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (!contains(a * b)) return false;
  return true;
}

FiniteMatrixGroup close_group(const CyclotomicField& field, std::size_t n, const std::vector<CycMatrix>& generators,
                              std::size_t cap) {
  for (const auto& g : generators) {
    if (g.dim() != n) throw Error(ErrorKind::InvalidArgument, "generator dimension mismatch");
    if (!(g.field() == field)) throw Error(ErrorKind::FieldMismatch, "generator field");
    if (!g.try_inverse()) throw Error(ErrorKind::NotInvertible, g.to_string());
  }
  // For a finite group, closing under right multiplication by the
  // generators already yields inverses (they are positive powers).
  std::unordered_set<CycMatrix> seen;
  std::vector<CycMatrix> elements;
  std::deque<CycMatrix> frontier;
  CycMatrix id = CycMatrix::identity(field, n);
  seen.insert(id);
  elements.push_back(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    CycMatrix x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      CycMatrix y = x * g;
      if (seen.count(y)) continue;
      if (elements.size() >= cap)
        throw Error(ErrorKind::CapExceeded, "group closure exceeded " + std::to_string(cap) + " elements");
      seen.insert(y);
      elements.push_back(y);
      frontier.push_back(std::move(y));
    }
  }
  return FiniteMatrixGroup(field, n, generators, std::move(elements));
}

FiniteMatrixGroup close_group(const std::vector<CycMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one generator");
  return close_group(generators.front().field(), generators.front().dim(), generators, cap);
}

long element_order(const CycMatrix& a, long cap) {
  if (!a.try_inverse()) throw Error(ErrorKind::NotInvertible, a.to_string());
  CycMatrix x = a;
  for (long k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = x * a;
  }
  throw Error(ErrorKind::CapExceeded, "no finite order up to " + std::to_string(cap));
}

SubfieldHandle galois_stabilizer(const FiniteMatrixGroup& g) {
  std::vector<long> stab;
  for (long a : g.field().units()) {
    bool stable = std::all_of(g.elements().begin(), g.elements().end(),
                              [&](const CycMatrix& x) { return g.contains(x.galois(a)); });
    if (stable) stab.push_back(a);
  }
  return SubfieldHandle(g.field(), stab);
}

Level matrix_level(const CycMatrix& a, const PrimeIdeal& beta, int cap) {
  if (!(a.field() == beta.field())) throw Error(ErrorKind::FieldMismatch, "matrix level");
  if (!a.is_integral()) throw Error(ErrorKind::NotIntegral, a.to_string());
  if (!a.inverse().is_integral()) throw Error(ErrorKind::NotIntegral, "inverse of " + a.to_string());
  Level level = Level::infinity();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CycElement d = a(i, j);
      if (i == j) d -= CycElement::one(a.field());
      if (d.is_zero()) continue;
      level = std::min(level, element_level(beta, d, cap));
      if (level.value() == 0) return level;
    }
  return level;
}

FiniteMatrixGroup congruence_kernel(const FiniteMatrixGroup& g, const PrimeIdeal& beta, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "congruence level must be positive");
  std::vector<CycMatrix> kernel;
  const int cap = std::max(k, kDefaultLevelCap);
  for (const auto& x : g.elements())
    if (matrix_level(x, beta, cap) >= Level(k)) kernel.push_back(x);
  FiniteMatrixGroup out(g.field(), g.dim(), kernel, kernel);
  if (!out.verify_closed()) throw Error(ErrorKind::InvalidArgument, "congruence kernel is not closed");
  return out;
}

}  // namespace galstab
