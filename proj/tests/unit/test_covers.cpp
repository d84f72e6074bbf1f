#include <doctest.h>

#include "higgs/covers/gonality.hpp"
#include "higgs/covers/theta_ring.hpp"

using namespace higgs;
using namespace higgs::arith;
using namespace higgs::covers;

namespace {

/// h0 of the m-th power of an even theta characteristic on a genus-2
/// curve by Riemann-Roch: 1, 0, 2 (canonical), then m - 1.
std::size_t riemann_roch(int m) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (m == 1) return 0;
  if (m == 2) return 2;
  return static_cast<std::size_t>(m - 1);
}

}  // namespace

TEST_CASE("Brill-Noether numbers") {
  CHECK(bn_number(4, 1, 3) == 0);
  CHECK(bn_number(10, 1, 6) == 0);
  for (int g = 0; g < 20; ++g)
    for (int d = -3; d < 25; ++d) CHECK(bn_number(g, 0, d) == d);
  CHECK_THROWS_AS(bn_number(-1, 1, 1), PreconditionError);
}

TEST_CASE("gonality table clause by clause") {
  CHECK(gonality_prediction(2, ThetaParity::even) == 3);
  CHECK(gonality_prediction(2, ThetaParity::odd) == 2);
  CHECK(gonality_prediction(3, ThetaParity::even) == 5);
  CHECK(gonality_prediction(3, ThetaParity::odd) == 4);
  CHECK(gonality_prediction(9, ThetaParity::even) == 12);
  CHECK_FALSE(gonality_prediction(7, ThetaParity::odd).has_value());
  for (int g = 4; g <= 40; ++g) {
    const auto even = gonality_prediction(g, ThetaParity::even);
    const auto odd = gonality_prediction(g, ThetaParity::odd);
    if (g % 2 == 0) {
      CHECK(even == g + 2);
      if (g >= 7) CHECK(odd == g + 2);
      else CHECK_FALSE(odd.has_value());
    } else {
      if (g >= 8) CHECK(even == g + 3);
      else CHECK_FALSE(even.has_value());
      if (g >= 11) CHECK(odd == g + 3);
      else CHECK_FALSE(odd.has_value());
    }
  }
  CHECK_THROWS_AS(gonality_prediction(1, ThetaParity::even), PreconditionError);
  CHECK(parse_parity("odd") == ThetaParity::odd);
  CHECK_FALSE(parse_parity("Odd").has_value());
}

TEST_CASE("Hilbert functions of the genus-2 rings") {
  PrimeField field(1009);
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ring = random_theta_ring(field, rng, false);
    const auto cover = random_theta_ring(field, rng, true);
    CHECK(ring.hilbert_dim(0) == 1);
    CHECK(cover.hilbert_dim(0) == 1);
    for (int m = 0; m <= 12; ++m) CHECK(ring.hilbert_dim(m) == riemann_roch(m));
    for (int m = 1; m <= 12; ++m) CHECK(cover.hilbert_dim(m) == ring.hilbert_dim(m) + ring.hilbert_dim(m - 1));
  }
  const auto ring = random_theta_ring(field, rng, false);
  CHECK(ring.hilbert_dim(6) == 5);
  CHECK(random_theta_ring(field, rng, true).hilbert_dim(6) == 9);
}

TEST_CASE("rewriting is confluent") {
  PrimeField field(1009);
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ring = random_theta_ring(field, rng, true);
    using Ring = Genus2ThetaRing<Fp>;
    // random element built from monomials of degree <= 12
    Ring::Element e;
    for (int t = 0; t < 6; ++t) {
      Monomial m{};
      int deg = 0;
      while (true) {
        const auto var = uniform_below(rng, 5);
        if (deg + kWeights[var] > 12) break;
        ++m[var];
        deg += kWeights[var];
      }
      e = Ring::multiply(Ring::monomial(Monomial{}, random_nonzero(field, rng)), e);
      e.try_emplace(m, field.zero()).first->second += random_nonzero(field, rng);
    }
    const auto reference = ring.normal_form(e);
    for (const auto& [mono, c] : reference) {
      CHECK(mono[2] <= 1);
      CHECK(mono[3] <= 1);
      CHECK(mono[4] <= 1);
    }
    for (int order = 0; order < 5; ++order) CHECK(ring.normal_form(e, &rng) == reference);
  }
  // W1^2 reduces to B1 exactly
  const auto ring = random_theta_ring(field, rng, false);
  const auto b1 = ring.normal_form(Genus2ThetaRing<Fp>::monomial({0, 0, 2, 0, 0}, field.one()));
  for (int a = 0; a <= 3; ++a) {
    const Monomial m{a, 3 - a, 0, 0, 0};
    CHECK((b1.count(m) ? b1.at(m) : field.zero()) == ring.b1()[a]);
  }
}

TEST_CASE("degree-one generation of the cover ring") {
  PrimeField field(1009);
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const auto cover = random_theta_ring(field, rng, true);
    CHECK(cover.generation_rank(3, 6) == 9);
    CHECK(cover.generation_in_degree(3, 6));
    CHECK(cover.generation_in_degree(4, 4));
    CHECK_FALSE(cover.generation_in_degree(3, 7));
  }
  const auto ring = random_theta_ring(field, rng, false);
  CHECK_THROWS_AS(ring.generation_in_degree(3, 6), PreconditionError);
  // B1 B2 with a repeated root is rejected
  const BinaryForm<Fp> cube(field, 3, {field.zero(), field.zero(), field.one()});
  CHECK_THROWS_AS(Genus2ThetaRing<Fp>(cube, ring.b2(), ring.l(), true), DataError);
}
