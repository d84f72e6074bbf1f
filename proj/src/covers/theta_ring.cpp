#include "higgs/covers/theta_ring.hpp"

namespace higgs::covers {

std::vector<Monomial> normal_basis(int degree, bool with_u) {
  std::vector<Monomial> out;
  for (int c1 = 0; c1 <= 1; ++c1)
    for (int c2 = 0; c2 <= 1; ++c2)
      for (int c3 = 0; c3 <= (with_u ? 1 : 0); ++c3) {
        const int rest = degree - 3 * (c1 + c2) - c3;
        if (rest < 0 || rest % 2) continue;
        for (int a = 0; a <= rest / 2; ++a) out.push_back({a, rest / 2 - a, c1, c2, c3});
      }
  std::sort(out.begin(), out.end());
  return out;
}

Genus2ThetaRing<arith::Fp> random_theta_ring(const arith::PrimeField& field, arith::Rng& rng,
                                              bool includes_cover) {
  auto random_form = [&](int twist) {
    BinaryForm<arith::Fp> f(field, twist);
    for (int a = 0; a <= twist; ++a) f.coeff(a) = arith::random_element(field, rng);
    return f;
  };
  while (true) {
    auto b1 = random_form(3);
    auto b2 = random_form(3);
    const auto prod = b1 * b2;
    if (prod.affine_degree() != 6 || arith::squarefree_part(prod).repeated_roots_detected) continue;
    auto l = random_form(1);
    if (l.is_zero()) continue;
    return Genus2ThetaRing<arith::Fp>(std::move(b1), std::move(b2), std::move(l), includes_cover);
  }
}

}  // namespace higgs::covers
