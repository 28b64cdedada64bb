#include <doctest.h>

#include <set>

#include "galstab/serialize.hpp"
#include "support.hpp"

using namespace galstab;
using gt::num;
using gt::zeta;

TEST_CASE("cyclotomic polynomials: small cases") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic polynomials agree with the product over primitive roots") {
  for (long m = 1; m <= 60; ++m) {
    CAPTURE(m);
    CHECK(cyclotomic_polynomial(m) == gt::cyclotomic_by_roots(m));
  }
}

TEST_CASE("Phi_m divides x^m - 1 and has degree phi(m)") {
  for (long m = 1; m <= 60; ++m) {
    const auto phi = cyclotomic_polynomial(m);
    CHECK(static_cast<long>(phi.size()) - 1 == euler_phi(m));
    CHECK(static_cast<long>(unit_group(m).size()) == euler_phi(m));
    std::vector<long> rem(static_cast<std::size_t>(m) + 1, 0);
    rem[0] = -1;
    rem[static_cast<std::size_t>(m)] = 1;
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = rem.size(); i-- > d;) {
      const long c = rem[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= d; ++j) rem[i - d + j] -= c * phi[j];
    }
    CHECK(std::all_of(rem.begin(), rem.end(), [](long c) { return c == 0; }));
  }
}

TEST_CASE("elementary arithmetic examples") {
  CyclotomicField f4(4), f3(3);
  const CycElement i = zeta(f4, 1), w = zeta(f3, 1), w2 = zeta(f3, 2);
  CHECK(elem_arith(ArithOp::Mul, i, &i) == num(f4, -1));
  const CycElement a = num(f3, 1) - zeta(f3, 1);
  const CycElement want = (num(f3, 2) + zeta(f3, 1)) * BigRational(1, 3);
  CHECK(elem_arith(ArithOp::Inv, a) == want);
  CHECK(elem_arith(ArithOp::Add, w, &w2) == num(f3, -1));
  CHECK(want.to_string() == "(2 + z)/3");
}

TEST_CASE("arithmetic errors") {
  CyclotomicField f3(3), f4(4);
  CHECK_THROWS_AS(CycElement::zero(f3).inverse(), Error);
  try {
    (void)CycElement::zero(f3).inverse();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  try {
    (void)(zeta(f3, 1) + zeta(f4, 1));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  try {
    (void)zeta(CyclotomicField(12), 1).galois(3);
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
}

TEST_CASE("Galois action examples") {
  CyclotomicField f12(12), f4(4);
  CHECK(galois_apply(GaloisElement(f12, 1), zeta(f12, 1)) == zeta(f12, 1));
  CHECK(galois_apply(GaloisElement(f12, 5), zeta(f12, 1)) == zeta(f12, 5));
  CHECK(galois_apply(GaloisElement(f4, 3), zeta(f4, 1)) == -zeta(f4, 1));
  CHECK(GaloisElement(f12, 5).compose(GaloisElement(f12, 7)).exponent() == 11);
  CHECK(GaloisElement(CyclotomicField(15), 7).cyclotomic_character(5) == 2);
}

TEST_CASE("norm examples") {
  CyclotomicField f3(3);
  CHECK(norm(num(f3, 1) - zeta(f3, 1)) == 3);
  CHECK(norm(num(f3, 2)) == 4);
  for (long m = 1; m <= 30; ++m) {
    BigRational n = norm(zeta(CyclotomicField(m), 1));
    CHECK((n == 1 || n == -1));
  }
}

TEST_CASE("norm matches the product of complex embeddings") {
  std::mt19937 rng(11);
  for (long m : {3L, 4L, 5L, 7L, 8L, 9L, 12L}) {
    CyclotomicField f(m);
    for (int t = 0; t < 30; ++t) {
      CycElement x = gt::random_element(rng, f, 3, true);
      std::complex<long double> prod = 1;
      for (long a : f.units()) prod *= gt::evaluate(x, a);
      const BigRational n = norm(x);
      CAPTURE(x.to_string());
      CHECK(std::abs(static_cast<double>(prod.imag())) < 1e-6 * (1 + std::abs(n.get_d())));
      CHECK(std::abs(static_cast<double>(prod.real()) - n.get_d()) < 1e-6 * (1 + std::abs(n.get_d())));
    }
  }
}

TEST_CASE("products agree with complex evaluation") {
  std::mt19937 rng(5);
  for (long m = 1; m <= 24; ++m) {
    CyclotomicField f(m);
    for (int t = 0; t < 10; ++t) {
      CycElement x = gt::random_element(rng, f), y = gt::random_element(rng, f);
      const long k = f.units()[rng() % f.units().size()];
      auto lhs = gt::evaluate(x * y, k);
      auto rhs = gt::evaluate(x, k) * gt::evaluate(y, k);
      CHECK(std::abs(lhs - rhs) < 1e-9L);
      auto g = gt::evaluate(x.galois(k), 1);
      CHECK(std::abs(g - gt::evaluate(x, k)) < 1e-9L);
    }
  }
}

TEST_CASE("property: inverses") {
  std::mt19937 rng(1);
  for (long m = 1; m <= 24; ++m) {
    CyclotomicField f(m);
    for (int t = 0; t < 12; ++t) {
      CycElement x = gt::random_element(rng, f);
      if (x.is_zero()) continue;
      CHECK((x * x.inverse()).is_one());
      CHECK(x.inverse().inverse() == x);
    }
  }
}

TEST_CASE("property: Galois action is a field automorphism and composes") {
  std::mt19937 rng(2);
  int cases = 0;
  for (long m = 1; m <= 24; ++m) {
    CyclotomicField f(m);
    for (int t = 0; t < 60; ++t, ++cases) {
      CycElement x = gt::random_element(rng, f), y = gt::random_element(rng, f);
      const auto& u = f.units();
      long a = u[rng() % u.size()], b = u[rng() % u.size()];
      CHECK((x + y).galois(a) == x.galois(a) + y.galois(a));
      CHECK((x * y).galois(a) == x.galois(a) * y.galois(a));
      CHECK(x.galois(1) == x);
      CHECK(x.galois(b).galois(a) == x.galois(mod_floor(a * b, m == 1 ? 1 : m)));
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("property: norm is multiplicative") {
  std::mt19937 rng(3);
  for (long m = 1; m <= 20; ++m) {
    CyclotomicField f(m);
    for (int t = 0; t < 8; ++t) {
      CycElement x = gt::random_element(rng, f), y = gt::random_element(rng, f);
      CHECK(norm(x * y) == norm(x) * norm(y));
    }
  }
}

TEST_CASE("property: integrality is closed under ring operations") {
  std::mt19937 rng(4);
  for (long m = 1; m <= 24; ++m) {
    CyclotomicField f(m);
    for (long k = -2 * m; k <= 2 * m; ++k) CHECK(zeta(f, k).is_integral());
    for (int t = 0; t < 10; ++t) {
      CycElement x = gt::random_element(rng, f, 9, true), y = gt::random_element(rng, f, 9, true);
      CHECK((x + y).is_integral());
      CHECK((x * y).is_integral());
      CHECK((x - y).is_integral());
    }
    if (f.degree() > 1) CHECK_FALSE((zeta(f, 1) * BigRational(1, 2)).is_integral());
  }
}

TEST_CASE("roots of unity") {
  for (long m = 1; m <= 24; ++m) {
    CyclotomicField f(m);
    std::set<std::string> seen;
    const long r = f.root_order();
    for (long k = 0; k < r; ++k) {
      CycElement z = CycElement::root_of_unity(f, k);
      CHECK(z.pow(r).is_one());
      seen.insert(z.to_string());
    }
    CHECK(static_cast<long>(seen.size()) == r);
  }
  CyclotomicField f3(3);
  CHECK(CycElement::root_of_unity(f3, 3) == num(f3, -1));
  CHECK(CycElement::root_of_unity(f3, 2) == zeta(f3, 1));
}

TEST_CASE("minimal subfield examples") {
  CyclotomicField f12(12);
  CHECK(minimal_subfield(num(f12, 5)).fixing_subgroup() == f12.units());
  CHECK(minimal_subfield(zeta(f12, 4)).fixing_subgroup() == std::vector<long>{1, 7});
  CHECK(minimal_subfield(zeta(f12, 1)).fixing_subgroup() == std::vector<long>{1});
}

TEST_CASE("property: minimal subfields are subgroups containing x and nothing smaller") {
  std::mt19937 rng(6);
  for (long m = 1; m <= 24; ++m) {
    CyclotomicField f(m);
    for (int t = 0; t < 6; ++t) {
      CycElement x = gt::random_element(rng, f);
      if (t % 2 == 0) x = x + x.galois(f.units().back());  // land in a proper subfield sometimes
      const SubfieldHandle k = minimal_subfield(x);
      const auto& h = k.fixing_subgroup();
      for (long a : h)
        for (long b : h) CHECK(std::binary_search(h.begin(), h.end(), m == 1 ? 1 : mod_floor(a * b, m)));
      CHECK(k.contains(x));
      for (long a : f.units())
        if (!k.fixes(a)) CHECK_FALSE(x.galois(a) == x);
    }
  }
}

TEST_CASE("subfield handles") {
  CyclotomicField f12(12);
  const auto q = SubfieldHandle::rationals(f12);
  const auto qi = SubfieldHandle::cyclotomic_subfield(f12, 4);
  const auto q3 = SubfieldHandle::cyclotomic_subfield(f12, 3);
  const auto all = SubfieldHandle::whole(f12);
  CHECK(qi.fixing_subgroup() == std::vector<long>{1, 5});
  CHECK(q3.fixing_subgroup() == std::vector<long>{1, 7});
  CHECK(q.degree() == 1);
  CHECK(qi.degree() == 2);
  CHECK(all.degree() == 4);
  CHECK(q.is_subfield_of(qi));
  CHECK(qi.is_subfield_of(all));
  CHECK_FALSE(qi.is_subfield_of(q3));
  CHECK(qi.contains(zeta(f12, 3)));
  CHECK_FALSE(qi.contains(zeta(f12, 4)));
  CHECK(qi.conductor() == 4);
  CHECK(q3.conductor() == 3);
  CHECK(q.conductor() == 1);
  CHECK(all.conductor() == 12);
  // Q(sqrt(3)) inside Q(zeta_12) has conductor 12.
  CHECK(SubfieldHandle(f12, std::vector<long>{11}).conductor() == 12);
}

TEST_CASE("embedding between cyclotomic fields") {
  CyclotomicField f4(4), f12(12);
  CHECK(embed(zeta(f4, 1), f12) == zeta(f12, 3));
  CHECK(embed(SubfieldHandle::whole(f4), f12) == SubfieldHandle::cyclotomic_subfield(f12, 4));
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    CyclotomicField f(gt::pick(rng, 1, 8));
    CyclotomicField big(f.conductor() * gt::pick(rng, 1, 4));
    CycElement x = gt::random_element(rng, f), y = gt::random_element(rng, f);
    CHECK(embed(x * y, big) == embed(x, big) * embed(y, big));
    CHECK(embed(x + y, big) == embed(x, big) + embed(y, big));
  }
}

TEST_CASE("primitive elements generate their subfield") {
  for (long m = 1; m <= 30; ++m) {
    CyclotomicField f(m);
    std::set<std::vector<long>> subgroups;
    for (long a : f.units())
      for (long b : f.units()) subgroups.insert(SubfieldHandle(f, std::vector<long>{a, b}).fixing_subgroup());
    for (const auto& h : subgroups) {
      const SubfieldHandle k(f, h);
      CAPTURE(m);
      CHECK(minimal_subfield(primitive_element(k)) == k);
    }
  }
}

TEST_CASE("element JSON round trip") {
  std::mt19937 rng(8);
  for (long m : {1L, 3L, 12L, 20L}) {
    CyclotomicField f(m);
    for (int t = 0; t < 10; ++t) {
      CycElement x = gt::random_element(rng, f) * BigRational(BigInt("123456789012345678901234567890"), 7);
      Json j = to_json(x);
      CHECK(element_from_json(j) == x);
      CHECK(element_from_json(Json::parse(j.dump())) == x);
    }
  }
  CHECK(to_json(CycElement::from_rational(CyclotomicField(3), BigRational(-2, 4))).dump() ==
        R"({"coeffs":[["-1","2"],["0","1"]],"m":3})");
}
