#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "higgs/arith/fq.hpp"
#include "higgs/arith/random.hpp"
#include "higgs/detquartic/fixture.hpp"
#include "higgs/detquartic/points.hpp"

using namespace higgs;
using namespace higgs::arith;
using namespace higgs::detquartic;

namespace {

/// Leibniz formula over all permutations.
template <class F>
F leibniz(const std::vector<std::vector<F>>& a, const F& zero) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  F total = zero;
  do {
    F term = a[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) term *= a[i][perm[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class M, class F>
std::vector<std::vector<F>> evaluate(const M& m, const std::array<F, 3>& x, const F& zero) {
  std::vector<std::vector<F>> out(m.d(), std::vector<F>(m.d(), zero));
  for (std::size_t i = 1; i <= m.d(); ++i)
    for (std::size_t j = 1; j <= m.d(); ++j) {
      const auto& l = m.entry(i, j);
      out[i - 1][j - 1] = l[0] * x[0] + l[1] * x[1] + l[2] * x[2];
    }
  return out;
}

template <class Ctx>
auto random_sym(const Ctx& ctx, std::size_t d, Rng& rng) {
  using F = typename Ctx::Element;
  SymLinMat<F> m(ctx, d);
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i; j <= d; ++j)
      m.set(i, j, {random_element(ctx, rng), random_element(ctx, rng), random_element(ctx, rng)});
  return m;
}

template <class Ctx>
auto random_lin(const Ctx& ctx, std::size_t d, Rng& rng) {
  using F = typename Ctx::Element;
  LinMat<F> m(ctx, d);
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 1; j <= d; ++j)
      m.set(i, j, {random_element(ctx, rng), random_element(ctx, rng), random_element(ctx, rng)});
  return m;
}

/// Laplace expansion along column j with the module's cofactors.
template <class M>
auto laplace_column(const M& m, std::size_t j) {
  using F = typename M::Context::Element;
  TernaryForm<F> acc(m.context());
  for (std::size_t i = 1; i <= m.d(); ++i) {
    const auto term = TernaryForm<F>::linear(m.context(), m.entry(i, j)) * cofactor(m, i, j);
    acc += (i + j) % 2 ? -term : term;
  }
  return acc;
}

TernaryForm<Fp> fermat_quartic(const PrimeField& field) {
  TernaryForm<Fp> f(field);
  f.add_term({4, 0, 0}, field.one());
  f.add_term({0, 4, 0}, field.one());
  f.add_term({0, 0, 4}, field.one());
  return f;
}

}  // namespace

TEST_CASE("extension fields") {
  for (auto [p, e] : {std::pair{7u, 1}, {7u, 2}, {7u, 3}, {3u, 4}, {1009u, 2}}) {
    const ExtensionField field(p, e);
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    CHECK(field.size() == q);
    Rng rng(p * 10 + e);
    for (int trial = 0; trial < 200; ++trial) {
      const Fq a = field.element(uniform_below(rng, q));
      const Fq b = field.element(uniform_below(rng, q));
      const Fq c = field.element(uniform_below(rng, q));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a.pow(q) == a);  // Frobenius fixes F_q
      if (!a.is_zero()) CHECK(a * a.inverse() == field.one());
    }
    // the elements are distinct: t generates a field of degree exactly e
    if (e > 1) {
      Fq t = field.generator(), power = t;
      int orbit = 1;
      while (!((power = power.pow(p)) == t)) ++orbit;
      CHECK(orbit == e);
    }
  }
  CHECK_THROWS_AS(ExtensionField(7, 0), DataError);
  CHECK_THROWS_AS(ExtensionField(8, 2), DataError);
  CHECK_THROWS_AS(ExtensionField(7, 2).one() + ExtensionField(7, 3).one(), FieldMismatch);
}

TEST_CASE("ternary forms and exact division") {
  PrimeField field(1009);
  const auto x0 = TernaryForm<Fp>::variable(field, 0);
  const auto x1 = TernaryForm<Fp>::variable(field, 1);
  const auto x2 = TernaryForm<Fp>::variable(field, 2);
  const auto f = x0 * x0 + x1 * x2 - x2 * x2;
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.partial(2) == x1 - x2 * field.from_int(2));
  const auto g = x0 * x1 - x2 * x2 * field.from_int(3);
  const auto q = divide_exact(f * g, f);
  REQUIRE(q.has_value());
  CHECK(*q == g);
  CHECK_FALSE(divide_exact(f * g + x0, f).has_value());
  CHECK(pseudo_remainder(f * g, f, 0).is_zero());
  CHECK_FALSE(pseudo_remainder(f * g + x1 * x1 * x1, f, 0).is_zero());
  CHECK((x0 * field.from_int(2) - x1).to_string() == "2*X0 + 1008*X1");
}

TEST_CASE("determinants and cofactors") {
  PrimeField field(1009);
  SymLinMat<Fp> diag(field, 3);
  diag.set(1, 1, {field.one(), field.zero(), field.zero()});
  diag.set(2, 2, {field.zero(), field.one(), field.zero()});
  diag.set(3, 3, {field.zero(), field.zero(), field.one()});
  CHECK(det_form(diag).to_string() == "X0*X1*X2");
  CHECK(cofactor(diag, 1, 1).to_string() == "X1*X2");
  CHECK(cofactor(diag, 1, 2).is_zero());
  CHECK_THROWS_AS(cofactor(diag, 0, 1), PreconditionError);
  CHECK_THROWS_AS(cofactor(diag, 1, 4), PreconditionError);

  // two equal rows in a symmetric matrix: m11 = m12 = m22 and m1j = m2j
  Rng rng(5);
  auto twins = random_sym(field, 4, rng);
  twins.set(1, 2, twins.entry(1, 1));
  twins.set(2, 2, twins.entry(1, 1));
  for (std::size_t j = 3; j <= 4; ++j) twins.set(2, j, twins.entry(1, j));
  CHECK(det_form(twins).is_zero());

  SUBCASE("det_form against Leibniz at random points") {
    for (std::size_t d = 1; d <= 5; ++d)
      for (int trial = 0; trial < 5; ++trial) {
        const auto m = random_sym(field, d, rng);
        const auto det = det_form(m);
        CHECK(det.is_homogeneous());
        CHECK(det.degree() <= static_cast<int>(d));
        for (int pt = 0; pt < 5; ++pt) {
          const std::array<Fp, 3> x{random_element(field, rng), random_element(field, rng), random_element(field, rng)};
          CHECK(det.eval(x) == leibniz(evaluate(m, x, field.zero()), field.zero()));
        }
      }
  }
  SUBCASE("Laplace identity and cofactor symmetry over F_1009 and Q") {
    for (std::size_t d = 2; d <= 5; ++d)
      for (int trial = 0; trial < 3; ++trial) {
        const auto m = random_sym(field, d, rng);
        const auto det = det_form(m);
        for (std::size_t j = 1; j <= d; ++j) CHECK(laplace_column(m, j) == det);
        for (std::size_t i = 1; i <= d; ++i)
          for (std::size_t j = i + 1; j <= d; ++j) CHECK(cofactor(m, i, j) == cofactor(m, j, i));
      }
    RationalField qq;
    for (std::size_t d = 2; d <= 5; ++d) {
      const auto m = random_sym(qq, d, rng);
      const auto det = det_form(m);
      for (std::size_t j = 1; j <= d; ++j) CHECK(laplace_column(m, j) == det);
      for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = i + 1; j <= d; ++j) CHECK(cofactor(m, i, j) == cofactor(m, j, i));
    }
  }
}

TEST_CASE("shipped determinantal fixture") {
  const auto fx = load_fixture("beauville-genus3");
  PrimeField field(1009);
  RationalField qq;
  const auto m = fixture_matrix<Rational>(fx, qq);
  REQUIRE(m.d() == 4);
  const auto det = det_form(m);
  CHECK(det.to_string() ==
        "-2*X0^3*X1 - 2*X0^3*X2 + 3*X0^2*X1^2 + 10*X0^2*X1*X2 - 5*X0^2*X2^2 - X0*X1^3 - 8*X0*X1^2*X2 + "
        "7*X0*X1*X2^2 - 4*X0*X2^3 - X1^3*X2 + 5*X1^2*X2^2 - 4*X1*X2^3");
  for (std::size_t j = 1; j <= 4; ++j) CHECK(laplace_column(m, j) == det);

  const auto cof = all_cofactors(m);
  int passed = 0;
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j)
      for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t l = 1; l <= 4; ++l) {
          passed += adjugate_identity_holds(cof, det, 4, i, j, k, l);
          const auto diff = cof[(i - 1) * 4 + j - 1] * cof[(k - 1) * 4 + l - 1] -
                            cof[(i - 1) * 4 + l - 1] * cof[(k - 1) * 4 + j - 1];
          CHECK(pseudo_remainder(diff, det, 0).is_zero());
        }
  CHECK(passed == 256);
  CHECK(adjugate_identity_check(m, 2, 2, 2, 2));

  auto broken = fx.matrix;
  broken[0][1] = {5, 0, 0};
  CHECK_THROWS_AS(fixture_matrix<Rational>(QuarticFixture{"x", broken, fx.column, {}}, qq), DataError);
  CHECK_THROWS_AS(load_fixture("no-such-fixture"), DataError);
  CHECK_THROWS_AS(parse_fixture("{\"matrix\": [[1]]}", "inline"), DataError);
}

TEST_CASE("adjugate identity on random matrices and a negative control") {
  PrimeField field(1009);
  Rng rng(11);
  for (std::size_t d : {3u, 4u})
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = random_sym(field, d, rng);
      const auto det = det_form(m);
      const auto cof = all_cofactors(m);
      for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = 1; j <= d; ++j)
          for (std::size_t k = 1; k <= d; ++k)
            for (std::size_t l = 1; l <= d; ++l) CHECK(adjugate_identity_holds(cof, det, d, i, j, k, l));
    }
  // Jacobi's identity: 2x2 minors of adj(M) are det M times minors of M, so
  // symmetry is not needed for the identity.
  const auto lin = random_lin(field, 3, rng);
  CHECK(adjugate_identity_check(lin, 1, 2, 3, 1));
  // cofactors of one matrix against the determinant of a perturbed one
  const auto m = random_sym(field, 3, rng);
  auto perturbed = m;
  perturbed.set(1, 2, {field.one(), field.zero(), field.zero()});
  CHECK_FALSE(adjugate_identity_holds(all_cofactors(m), det_form(perturbed), 3, 1, 2, 2, 1));
  CHECK(adjugate_identity_holds(all_cofactors(m), det_form(perturbed), 3, 1, 2, 1, 2));  // i = k, j = l

  SymLinMat<Fp> zero(field, 3);
  CHECK_THROWS_AS(adjugate_identity_check(zero, 1, 1, 2, 2), PreconditionError);
}

TEST_CASE("rank-drop points") {
  const auto fx = load_fixture("beauville-genus3");
  SUBCASE("fixture contains the three collinear points") {
    const PrimeField field(1163);
    const auto pts = rank_drop_points(fixture_augmented<Fp>(fx, field));
    for (PlanePoint q : {PlanePoint{1, 0, 0}, PlanePoint{0, 1, 0}, PlanePoint{1, 1, 0}, PlanePoint{0, 0, 1}})
      CHECK(std::find(pts.begin(), pts.end(), q) != pts.end());
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    // every rank-drop point lies on the curve
    const auto det = det_form(fixture_matrix<Fp>(fx, field));
    for (const auto& pt : pts)
      CHECK(det.eval({field.from_int(pt[0]), field.from_int(pt[1]), field.from_int(pt[2])}).is_zero());
  }
  SUBCASE("invariant under column scaling, independent of threads") {
    const PrimeField field(101);
    auto a = fixture_augmented<Fp>(fx, field);
    const auto base = rank_drop_points(a);
    CHECK(rank_drop_points(a, 3) == base);
    for (auto& c : a.column) c *= field.from_int(17);
    CHECK(rank_drop_points(a) == base);
  }
  SUBCASE("zero column drops rank exactly on the curve") {
    const PrimeField field(61);
    Rng rng(3);
    for (int trial = 0; trial < 3; ++trial) {
      const auto m = random_sym(field, 4, rng);
      const AugmentedMat<Fp> a(m, std::vector<Fp>(4, field.zero()));
      CHECK(rank_drop_points(a) == rational_points(det_form(m)));
    }
  }
  CHECK(normalize({Fp(2, 7), Fp(4, 7), Fp(2, 7)}) == PlanePoint{1, 2, 1});
  CHECK_THROWS_AS(normalize({Fp(0, 7), Fp(0, 7), Fp(0, 7)}), PreconditionError);
}

TEST_CASE("smoothness search") {
  for (std::uint32_t p : {7u, 11u, 19u}) {
    const PrimeField field(p);
    const auto r = smooth_plane_curve_check(fermat_quartic(field), 2);
    CHECK(r.status == Smoothness::smooth_over_checked_fields);
    CHECK(r.checked_degree == 2);
  }
  const PrimeField field(1009);
  TernaryForm<Fp> conic(field);
  conic.add_term({2, 2, 0}, field.one());
  const auto r = smooth_plane_curve_check(conic, 2);
  REQUIRE(r.status == Smoothness::singular_point_found);
  // verify the witness independently
  const ExtensionField ext(1009, 1);
  const auto& w = *r.witness;
  CHECK(w[0] * w[0] * w[1] * w[1] == ext.zero());
  CHECK(w[0] * w[1] * w[1] == ext.zero());
  CHECK(w[0] * w[0] * w[1] == ext.zero());

  // a node at [0, 0, 1] and a singular point at infinity
  TernaryForm<Fp> nodal(field);
  nodal.add_term({2, 0, 1}, field.one());
  nodal.add_term({0, 2, 1}, -field.one());
  nodal.add_term({3, 0, 0}, field.one());
  CHECK(smooth_plane_curve_check(nodal, 1).status == Smoothness::singular_point_found);
  TernaryForm<Fp> cusp_at_infinity(field);  // X1^2 X2 = X0^3 moved by X0 <-> X2
  cusp_at_infinity.add_term({1, 2, 0}, field.one());
  cusp_at_infinity.add_term({0, 0, 3}, -field.one());
  const auto ci = smooth_plane_curve_check(cusp_at_infinity, 1);
  REQUIRE(ci.status == Smoothness::singular_point_found);
  CHECK((*ci.witness)[2].is_zero());

  // (X0^2 + X1^2)^2 + X2^4 is singular exactly at [+-i, 1, 0], which for
  // p = 3 mod 4 are only defined over F_{p^2}; likewise in the affine chart
  for (int swap : {0, 1}) {
    const PrimeField f7(7);
    const int a = 1 + swap, b = 2 - swap;
    TernaryForm<Fp> g(f7);
    Exponent e{};
    e = {4, 0, 0};
    g.add_term(e, f7.one());
    e = {2, 0, 0};
    e[a] = 2;
    g.add_term(e, f7.from_int(2));
    e = {0, 0, 0};
    e[a] = 4;
    g.add_term(e, f7.one());
    e = {0, 0, 0};
    e[b] = 4;
    g.add_term(e, f7.one());
    const auto over_base = smooth_plane_curve_check(g, 1);
    CHECK(over_base.status == Smoothness::smooth_over_checked_fields);
    CHECK(over_base.checked_degree == 1);
    const auto over_ext = smooth_plane_curve_check(g, 2);
    REQUIRE(over_ext.status == Smoothness::singular_point_found);
    const auto& w = *over_ext.witness;
    CHECK(w[b].is_zero());
    CHECK(w[0] * w[0] + w[a] * w[a] == w[0].context().zero());
    CHECK(over_ext.checked_degree == 1);
  }
  CHECK(smooth_plane_curve_check(fermat_quartic(PrimeField(1009)), 3, 1000).status == Smoothness::inconclusive);

  const auto fx = load_fixture("beauville-genus3");
  const auto det = det_form(fixture_matrix<Fp>(fx, field));
  CHECK(smooth_plane_curve_check(det, 1).status == Smoothness::smooth_over_checked_fields);
  CHECK_THROWS_AS(smooth_plane_curve_check(TernaryForm<Fp>(field), 1), PreconditionError);
}
