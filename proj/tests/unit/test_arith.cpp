#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "higgs/arith/binary_form.hpp"
#include "higgs/arith/determinant.hpp"
#include "higgs/arith/dual.hpp"
#include "higgs/arith/factor.hpp"
#include "higgs/arith/matrix.hpp"
#include "higgs/arith/random.hpp"
#include "higgs/arith/resultant.hpp"
#include "higgs/arith/squarefree.hpp"
#include "higgs/arith/text_format.hpp"

using namespace higgs;
using namespace higgs::arith;

namespace {

using Form = BinaryForm<Fp>;

Form random_form(const PrimeField& k, int twist, Rng& rng) {
  Form f(k, twist);
  for (int a = 0; a <= twist; ++a) f.coeff(a) = random_element(k, rng);
  return f;
}

Form form(const PrimeField& k, int twist, std::vector<std::int64_t> c) {
  std::vector<Fp> v;
  for (auto x : c) v.push_back(k.from_int(x));
  return Form(k, twist, v);
}

}  // namespace

TEST_CASE("h0 counts sections of O(m)") {
  CHECK(h0(0) == 1);
  CHECK(h0(-3) == 0);
  CHECK(h0(5) == 6);
  for (int m = -30; m <= 30; ++m) CHECK(h0(m) + h0(-m - 2) == std::abs(m + 1));
}

TEST_CASE("prime field elements are canonical and never mix") {
  PrimeField k(1009);
  CHECK(k.from_int(-1).value() == 1008);
  CHECK(k.from_int(2019).value() == 1);
  CHECK((k.from_int(5) * k.from_int(5).inverse()).is_one());
  CHECK(k.parse("-3/4") * k.from_int(4) == k.from_int(-3));
  CHECK(k.parse("123456789012345678901234567890").value() == 631);
  PrimeField other(7);
  CHECK_THROWS_AS(k.one() + other.one(), FieldMismatch);
  CHECK_THROWS_AS(PrimeField(1000), DataError);
  CHECK_THROWS_AS(k.zero().inverse(), PreconditionError);
}

TEST_CASE("rationals stay in lowest terms") {
  RationalField q;
  Rational a = q.parse("-6/4");
  CHECK(a.to_string() == "-3/2");
  CHECK((a * a).to_string() == "9/4");
  CHECK(q.parse("22/7").denominator() == 7);
  CHECK_THROWS_AS(q.parse("1/0"), DataError);
}

TEST_CASE("binary forms: twists, chart swap, products") {
  PrimeField k(1009);
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int m1 = static_cast<int>(uniform_below(rng, 6));
    const int m2 = static_cast<int>(uniform_below(rng, 6));
    Form f = random_form(k, m1, rng);
    Form g = random_form(k, m2, rng);
    CHECK(f.chart_swap().chart_swap() == f);
    CHECK((f * g).chart_swap() == f.chart_swap() * g.chart_swap());
    CHECK((f * g).twist() == m1 + m2);
  }
  Form f = form(k, 2, {1, 0, 3});
  CHECK_THROWS_AS(f + form(k, 3, {1}), TwistMismatch);
  CHECK_THROWS_AS(form(k, 1, {1, 2, 3}), TwistMismatch);
  Form neg(k, -2);
  CHECK(neg.coeffs().empty());
  CHECK(neg.is_zero());
  CHECK((neg * f).twist() == 0);
  // x^2 in O(3) vanishes at infinity, in O(2) it does not
  CHECK(form(k, 3, {0, 0, 1}).eval_at_infinity().is_zero());
  CHECK(form(k, 2, {0, 0, 1}).eval_at_infinity().is_one());
}

TEST_CASE("dual forms satisfy the Leibniz rule exactly") {
  PrimeField k(1009);
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int m1 = static_cast<int>(uniform_below(rng, 5));
    const int m2 = static_cast<int>(uniform_below(rng, 5));
    DualForm<Fp> a(random_form(k, m1, rng), random_form(k, m1, rng));
    DualForm<Fp> b(random_form(k, m2, rng), random_form(k, m2, rng));
    auto prod = a * b;
    CHECK(prod.value() == a.value() * b.value());
    CHECK(prod.derivative() == a.value() * b.derivative() + a.derivative() * b.value());
    CHECK(prod.value().twist() == prod.derivative().twist());
  }
  CHECK_THROWS_AS(DualForm<Fp>(form(k, 1, {1}), form(k, 2, {1})), TwistMismatch);
}

TEST_CASE("form resultant: small closed forms") {
  PrimeField k(1009);
  Rng rng(3);
  const Form one = Form::constant(k.one());
  SUBCASE("T^2 - c against 2T gives -4c") {
    Form c = random_form(k, 4, rng);
    TPoly<Fp> f({-c, Form(k, 2), one});
    TPoly<Fp> g({Form(k, 2), one * k.from_int(2)});
    CHECK(form_resultant(f, g) == c * k.from_int(-4));
  }
  SUBCASE("T - a against T - b gives a - b") {
    Form a = random_form(k, 3, rng);
    Form b = random_form(k, 3, rng);
    CHECK(form_resultant(TPoly<Fp>({-a, one}), TPoly<Fp>({-b, one})) == a - b);
  }
  SUBCASE("monic quadratic against its T-derivative") {
    // Sylvester determinant expanded by hand:
    // |1 s1 s2; 2 s1 0; 0 2 s1| = s1^2 - 2 s1^2 + 4 s2 = 4 s2 - s1^2
    Form s1 = random_form(k, 2, rng);
    Form s2 = random_form(k, 4, rng);
    TPoly<Fp> chi({s2, s1, one});
    Form res = form_resultant(chi, chi.derivative());
    CHECK(res.twist() == 4);
    CHECK(res == s2 * k.from_int(4) - s1 * s1);
  }
  CHECK_THROWS_AS(TPoly<Fp>({one, Form(k, 0)}), PreconditionError);
}

TEST_CASE("resultant antisymmetry, exhaustive over monic cubics and below over F_7") {
  PrimeField k(7);
  std::vector<TPoly<Fp>> polys;
  for (int deg = 1; deg <= 3; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= 7;
    for (int code = 0; code < count; ++code) {
      std::vector<Form> c;
      int rest = code;
      for (int i = 0; i < deg; ++i) {
        c.push_back(Form::constant(k.from_int(rest % 7)));
        rest /= 7;
      }
      c.push_back(Form::constant(k.one()));
      polys.emplace_back(c);
    }
  }
  int mismatches = 0;
  int vanishing_mismatches = 0;
  for (const auto& f : polys)
    for (const auto& g : polys) {
      const Form rfg = form_resultant(f, g);
      const Form rgf = form_resultant(g, f);
      const bool odd = (f.degree() * g.degree()) % 2 == 1;
      if (rfg != (odd ? -rgf : rgf)) ++mismatches;
      // independent check: Res vanishes iff a common factor exists
      Poly<Fp> pf = f.fiber(k.zero()), pg = g.fiber(k.zero());
      if (rfg.is_zero() != (gcd(pf, pg).degree() > 0)) ++vanishing_mismatches;
    }
  CHECK(mismatches == 0);
  CHECK(vanishing_mismatches == 0);
}

TEST_CASE("squarefree part of binary forms, both charts") {
  PrimeField k(1009);
  SUBCASE("distinct roots") {
    // x(x-1)(x-2) = x^3 - 3x^2 + 2x
    Form f = form(k, 3, {0, 2, -3, 1});
    auto r = squarefree_part(f);
    CHECK_FALSE(r.repeated_roots_detected);
    CHECK(r.squarefree == f);
  }
  SUBCASE("double root") {
    auto r = squarefree_part(form(k, 2, {0, 0, 1}));
    CHECK(r.repeated_roots_detected);
    CHECK(r.squarefree == form(k, 1, {0, 1}));
  }
  SUBCASE("double root at infinity from twist padding") {
    // x^2 (x-1)^2 has affine degree 4; as a section of O(6) it vanishes
    // to order 2 at infinity, as a section of O(5) to order 1.
    Form f6 = form(k, 6, {0, 0, 1, -2, 1});
    auto r6 = squarefree_part(f6);
    CHECK(r6.repeated_roots_detected);
    CHECK(r6.squarefree == form(k, 3, {0, -1, 1}));
    // only the point at infinity repeats here
    Form g6 = form(k, 6, {0, 1, -3, 2});
    CHECK(squarefree_part(g6).repeated_roots_detected);
    Form g4 = form(k, 4, {0, 1, -3, 2});
    auto r4 = squarefree_part(g4);
    CHECK_FALSE(r4.repeated_roots_detected);
    CHECK(r4.squarefree.twist() == 4);
  }
  CHECK_THROWS_AS(squarefree_part(Form(k, 3)), PreconditionError);
  PrimeField small(3);
  CHECK_THROWS_AS(squarefree_part(BinaryForm<Fp>(small, 3, {small.one()})), PreconditionError);
}

TEST_CASE("text format round trip") {
  PrimeField k(1009);
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Form f = random_form(k, static_cast<int>(uniform_below(rng, 8)) - 1, rng);
    if (trial % 3 == 0 && f.twist() >= 1) f.coeff(f.twist()) = k.zero();
    const std::string text = to_text(f);
    CHECK(parse_form<Fp>(k, text) == f);
    CHECK(to_text(parse_form<Fp>(k, text)) == text);
  }
  CHECK(to_text(parse_form<Fp>(k, "3*x^2 + 1; twist=2")) == "3*x^2 + 1; twist=2");
  CHECK(parse_form<Fp>(k, "-x + 2 - 1/2*x^3 ; twist = 4") ==
        form(k, 4, {2, -1, 0, (1009 - 1) / 2 * 1}));
  CHECK(to_text(Form(k, 2)) == "0; twist=2");
  CHECK_THROWS_AS(parse_form<Fp>(k, "x^3; twist=2"), TwistMismatch);
  CHECK_THROWS_AS(parse_form<Fp>(k, "x^2 + 1"), DataError);
  CHECK_THROWS_AS(parse_form<Fp>(k, "x^2 + y; twist=2"), DataError);
  CHECK_THROWS_AS(parse_form<Fp>(k, "x^2 +; twist=2"), DataError);

  RationalField q;
  auto r = parse_form<Rational>(q, "3/4*x^2 - 5; twist=3");
  CHECK(to_text(r) == "3/4*x^2 - 5; twist=3");
  CHECK(parse_form<Rational>(q, to_text(r)) == r);
}

TEST_CASE("determinant routines agree") {
  PrimeField k(1009);
  Rng rng(13);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Poly<Fp>> a;
    for (std::size_t i = 0; i < n * n; ++i)
      a.push_back(Poly<Fp>(k, {random_element(k, rng), random_element(k, rng)}));
    LaplaceExpander<Poly<Fp>> lap(a, n);
    const Poly<Fp> d1 = lap.determinant();
    const Poly<Fp> d2 = bareiss_determinant(a, n);
    CHECK(d1 == d2);
    // Berkowitz: constant term of det(T - A) is (-1)^n det A; trace term too
    auto p = berkowitz(a, n);
    CHECK(p.size() == n + 1);
    CHECK((n % 2 ? -p[n] : p[n]) == d1);
    auto sums = lap.principal_minor_sums();
    for (std::size_t i = 1; i <= n; ++i) CHECK((i % 2 ? -p[i] : p[i]) == sums[i - 1]);
  }
  Matrix<Fp> m(k, 3, 3);
  m(0, 0) = k.from_int(2);
  m(1, 1) = k.from_int(3);
  m(2, 0) = k.from_int(4);
  CHECK(m.rank() == 2);
  CHECK(m.determinant().is_zero());
}

TEST_CASE("finite-field factorization reassembles its input") {
  PrimeField k(1009);
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Fp> c;
    const int deg = 1 + static_cast<int>(uniform_below(rng, 8));
    for (int i = 0; i < deg; ++i) c.push_back(random_element(k, rng));
    c.push_back(k.one());
    Poly<Fp> f(k, c);
    f = f * f.derivative().monic();  // force some repeated structure sometimes
    if (f.is_zero()) continue;
    Poly<Fp> prod(k, {k.one()});
    for (const auto& fac : factor(f)) {
      for (int i = 0; i < fac.multiplicity; ++i) prod *= fac.factor;
      // irreducible: no roots for degree 2/3 factors
      if (fac.factor.degree() <= 3 && fac.factor.degree() > 1)
        CHECK(roots(fac.factor).empty());
    }
    CHECK(prod == f.monic());
  }
  // roots against brute force
  PrimeField k7(7);
  Poly<Fp> g(k7, {k7.from_int(0), k7.from_int(0), k7.from_int(1)});  // x^2
  g = g * Poly<Fp>(k7, {k7.from_int(-3), k7.one()}) * Poly<Fp>(k7, {k7.one(), k7.zero(), k7.one()});
  auto rs = roots(g);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].first.value() == 0);
  CHECK(rs[0].second == 2);
  CHECK(rs[1].first.value() == 3);
}
