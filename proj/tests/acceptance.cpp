// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "galstab/cli.hpp"
#include "galstab/constructions.hpp"
#include "galstab/structure.hpp"
#include "pu_fixtures.hpp"
#include "structure_support.hpp"
#include "support.hpp"

using namespace galstab;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Verdict()> body;
};

void require(Verdict& v, bool cond, const std::string& what) {
  if (!cond && v.ok) {
    v.ok = false;
    v.detail = what;
  }
}

Json run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str().empty() ? Json() : Json::parse(out.str());
}

Verdict bound_values() {
  Verdict v;
  auto check = [&](long p, long s, long f, long expected) {
    int code = 0;
    const Json j = run_cli({"bound", "--p", std::to_string(p), "--s", std::to_string(s), "--f", std::to_string(f)}, code);
    require(v, code == 0 && j["result"] == expected,
            "bound p=" + std::to_string(p) + " s=" + std::to_string(s) + " gave " + j.dump());
  };
  for (long p : {3L, 5L, 7L, 11L, 13L}) check(p, 1, 1, 0);
  check(2, 1, 1, 1);
  check(2, 2, 1, 0);
  if (v.ok) v.detail = "7 instances";
  return v;
}

Verdict torsion_audit() {
  Verdict v;
  std::ostringstream d;
  for (auto [m, p] : {std::pair{3L, 3L}, {4L, 2L}, {5L, 5L}}) {
    const CyclotomicField f(m);
    const auto beta = decompose_prime(f, p)[0];
    const auto ws = torsion_witnesses(f, 2, 60, 1);
    std::vector<TorsionWitness> tw;
    for (const auto& w : ws) tw.push_back({w, beta});
    const TorsionAuditReport r = torsion_level_audit(tw);
    std::size_t in_kernel = 0;
    for (const auto& e : r.entries) {
      if (!e.in_kernel || e.order <= 1) continue;
      ++in_kernel;
      long o = e.order;
      while (o % p == 0) o /= p;
      require(v, o == 1, "non p-power torsion in the congruence subgroup");
      require(v, e.level <= Level(static_cast<int>(minkowski_bound(p, e.s, beta.e()))), "level above bound");
    }
    require(v, ws.size() >= 50, "fewer than 50 witnesses");
    require(v, r.pass, "audit reported a violation");
    require(v, r.sharp, "bound not attained for m=" + std::to_string(m));
    d << "m=" << m << ":" << ws.size() << "w/" << in_kernel << "k ";
  }
  if (v.ok) v.detail = d.str() + "all sharp";
  return v;
}

Verdict worked_example() {
  Verdict v;
  int code = 0;
  const Json j = run_cli({"pu", "--L", "Q(i)", "--K", "Q", "--p", "3", "--m", "12"}, code);
  const Json& r = j["results"];
  require(v, code == 0, "pu exit code " + std::to_string(code));
  require(v, r["order"] == 9, "order");
  require(v, r["stability_verified"] == true && r["stability_checks"] == 8, "stability");
  require(v, r["psi_table"].size() == 4, "exponents");
  require(v, r["field_of_definition"]["fixing"] == Json::array({1}) && r["field_of_definition"]["m"] == 12,
          "field of definition");
  require(v, r["integral"] == false, "integrality");

  const CyclotomicField f4(4), f12(12);
  const EmbeddingMatrix e =
      embedding_matrix(SubfieldHandle::whole(f4), SubfieldHandle::rationals(f4), {gt::num(f4, 1), gt::zeta(f4, 1)});
  const PUReport pu = build_pu(e, 3, 12);
  const CycElement i = gt::zeta(f12, 3), z3 = gt::zeta(f12, 4), one = gt::num(f12, 1);
  const BigRational half(1, 2);
  const CycMatrix gen =
      gt::mat(f12, {{(z3 + one) * half, i * (z3 - one) * half}, {i * (one - z3) * half, (z3 + one) * half}});
  require(v, pu.group.contains(gen), "generator not in the group");
  if (v.ok) v.detail = "order 9, 8 stability checks, field Q(zeta_12), not integral";
  return v;
}

Verdict field_of_definition_law() {
  Verdict v;
  std::size_t count = 0;
  for (const auto& fx : gt::pu_fixtures()) {
    if (fx.ambient_m > 40) continue;
    const PUReport r = build_pu(gt::fixture_embedding(fx), fx.p, fx.ambient_m);
    const std::string tag = fx.l + "/" + fx.k + " p=" + std::to_string(fx.p) + " m=" + std::to_string(fx.ambient_m);
    require(v, r.stability_verified, "stability failed for " + tag);
    require(v, r.field_of_definition == r.predicted_field, "law failed for " + tag);
    const SubfieldHandle k = embed(cli::parse_subfield(fx.k, CyclotomicField(fx.field_m)), r.group.field());
    std::vector<long> expected;
    for (long a : gt::entrywise_stabilizer(r.group))
      if (k.fixes(a)) expected.push_back(a);
    require(v, r.field_of_definition.fixing_subgroup() == expected, "oracle disagrees for " + tag);
    ++count;
  }
  require(v, count >= 5, "fewer than 5 fixtures");
  if (v.ok) v.detail = std::to_string(count) + " fixtures";
  return v;
}

Verdict structure_suite() {
  Verdict v;
  std::mt19937 rng(5);
  int sigma_cases = 0, rho_cases = 0, kernel_cases = 0;
  while (sigma_cases < 500) {
    const CyclotomicField f(rng() % 2 ? 3 : 12);
    const auto sizes = gt::random_sizes(rng, static_cast<std::size_t>(gt::pick(rng, 1, 4)));
    const FiniteMatrixGroup p = gt::block_group(f, sizes, 3);
    const auto sdf = strongly_diagonal_form(p);
    const CycMatrix n1 = gt::random_normalizer(rng, f, sizes, true), n2 = gt::random_normalizer(rng, f, sizes, true);
    const auto s1 = sigma(n1, p), s2 = sigma(n2, p);
    require(v, sigma(n1 * n2, p).matrix == s1.matrix * s2.matrix, "sigma not multiplicative");
    require(v, is_block_diagonal(n1 * s1.matrix.inverse(), sdf), "N T^-1 outside the centralizer");
    ++sigma_cases;
  }
  while (rho_cases < 200) {
    const CyclotomicField f(rng() % 2 ? 3 : 12);
    const auto sizes = gt::random_sizes(rng, static_cast<std::size_t>(gt::pick(rng, 1, 4)));
    const auto sdf = strongly_diagonal_form(gt::block_group(f, sizes, 3));
    const CycMatrix a = gt::random_normalizer(rng, f, sizes, rho_cases % 2 == 0);
    const CycMatrix b = gt::random_normalizer(rng, f, sizes, rho_cases % 3 == 0);
    const CycMatrix ra = rho_apply(a, sdf);
    require(v, rho_apply(a * b, sdf) == ra * rho_apply(b, sdf), "rho not multiplicative");
    for (long c : f.units()) require(v, ra.galois(c) == rho_apply(a.galois(c), sdf), "rho not Galois equivariant");
    ++rho_cases;
  }
  const CyclotomicField f3(3);
  for (std::size_t n : {2u, 3u}) {
    const auto shapes = n == 2 ? std::vector<std::vector<std::size_t>>{{1, 1}, {2}}
                               : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {2, 1}, {1, 2}, {3}};
    for (const auto& sizes : shapes) {
      const auto sdf = strongly_diagonal_form(gt::block_group(f3, sizes, 3));
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      do {
        std::vector<long> ex(n, 0);
        while (true) {
          CycMatrix a = CycMatrix::permutation(f3, perm);
          for (std::size_t j = 0; j < n; ++j) a(perm[j], j) = CycElement::root_of_unity(f3, ex[j]);
          bool normalizes = true;
          CycMatrix r(f3, 1);
          try {
            r = rho_apply(a, sdf);
          } catch (const Error&) {
            normalizes = false;
          }
          if (normalizes) {
            require(v, r.is_identity() == is_block_scalar(a, sdf), "rho kernel differs from block scalars");
            ++kernel_cases;
          }
          std::size_t k = 0;
          while (k < n && ++ex[k] == f3.root_order()) ex[k++] = 0;
          if (k == n) break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  if (v.ok)
    v.detail = std::to_string(sigma_cases) + " sigma, " + std::to_string(rho_cases) + " rho, " +
               std::to_string(kernel_cases) + " kernel cases";
  return v;
}

Verdict diagonalization() {
  Verdict v;
  std::mt19937 rng(6);
  const long ms[] = {3, 4, 6, 12};
  int cases = 0;
  for (; cases < 200; ++cases) {
    const CyclotomicField f(ms[rng() % 4]);
    const std::size_t n = static_cast<std::size_t>(gt::pick(rng, 1, 4));
    auto [t0, t0i] = gt::unimodular_pair(rng, n, 6);
    const CycMatrix tm = CycMatrix::from_integers(f, t0), tmi = CycMatrix::from_integers(f, t0i);
    std::vector<CycMatrix> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<long> ex(n);
      for (auto& e : ex) e = gt::pick(rng, 0, f.root_order() - 1);
      gens.push_back(tm * gt::diag(f, ex) * tmi);
    }
    const FiniteMatrixGroup g = close_group(gens);
    const auto r = simultaneous_diagonalize_over_Z(g);
    require(v, r.ok && is_unimodular(r.conjugator), "no unimodular diagonalizer");
    if (!r.ok) break;
    const CycMatrix c = CycMatrix::from_integers(f, r.conjugator);
    const CycMatrix ci = CycMatrix::from_integers(f, unimodular_inverse(r.conjugator));
    for (const auto& x : g.elements()) require(v, (ci * x * c).is_diagonal(), "conjugate not diagonal");
  }
  if (v.ok) v.detail = std::to_string(cases) + " conjugates";
  return v;
}

Verdict semi_invariant() {
  Verdict v;
  std::mt19937 rng(7);
  const long ms[] = {1, 3, 4, 5, 8, 12};
  int cases = 0;
  for (; cases < 200; ++cases) {
    const CyclotomicField f(ms[rng() % 6]);
    const std::size_t n = static_cast<std::size_t>(gt::pick(rng, 1, 4));
    auto [q, qi] = gt::unimodular_pair(rng, n, 6);
    std::vector<long> ex(n);
    for (auto& e : ex) e = gt::pick(rng, 0, f.root_order() - 1);
    const CycMatrix a = gt::diag(f, ex) * CycMatrix::from_integers(f, q);
    const auto r = factor_semi_invariant(a, SubfieldHandle::whole(f));
    require(v, r.ok, "factorization failed");
    if (!r.ok) break;
    require(v, is_unimodular(r.q), "Q not unimodular");
    require(v, CycMatrix::diagonal(r.zetas) * CycMatrix::from_integers(f, r.q) == a, "product differs from input");
  }
  if (v.ok) v.detail = std::to_string(cases) + " factorizations";
  return v;
}

Verdict a_type() {
  Verdict v;
  std::mt19937 rng(8);
  const long ms[] = {1, 3, 4, 5, 6, 8, 12};
  int cases = 0, skipped = 0;
  while (cases < 100) {
    const CyclotomicField f(ms[rng() % 7]);
    const std::size_t n = static_cast<std::size_t>(gt::pick(rng, 1, 4));
    std::vector<CycMatrix> gens{gt::random_monomial(rng, f, n)};
    if (rng() % 2) gens.push_back(gt::random_monomial(rng, f, n));
    std::optional<FiniteMatrixGroup> g;
    try {
      g = close_group(gens, 3000);
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    std::vector<std::vector<std::size_t>> singles;
    for (std::size_t i = 0; i < n; ++i) singles.push_back({i});
    const auto d = ATypeDecomposition::coordinate(singles, n);
    const ATypeResult r = verify_a_type(*g, d);
    require(v, r.ok, "monomial group not certified");
    require(v, r.ok && check_a_type_certificate(*g, d, r.certificate), "certificate does not re-verify");
    ++cases;
  }
  if (v.ok) v.detail = std::to_string(cases) + " groups (" + std::to_string(skipped) + " over the order cap skipped)";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "congruence torsion bounds", 1.0, bound_values},
      {2, "torsion level audit", 30.0, torsion_audit},
      {3, "P_U worked example", 5.0, worked_example},
      {4, "field of definition law", 60.0, field_of_definition_law},
      {5, "sigma / rho structure", 60.0, structure_suite},
      {6, "diagonalization round trip", 60.0, diagonalization},
      {7, "semi-invariant round trip", 60.0, semi_invariant},
      {8, "monomial A-type certificates", 60.0, a_type},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = v.ok && in_time;
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << v.detail
              << (in_time ? "" : " [too slow]") << " " << std::fixed << std::setprecision(2) << secs << "s < "
              << c.limit_seconds << "s\n";
  }
  return all ? 0 : 1;
}
