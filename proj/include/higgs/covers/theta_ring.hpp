#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "higgs/arith/binary_form.hpp"
#include "higgs/arith/matrix.hpp"
#include "higgs/arith/random.hpp"
#include "higgs/arith/squarefree.hpp"

namespace higgs::covers {

using arith::BinaryForm;
using arith::Field;

/// Exponents of X, Y, W1, W2, U.
using Monomial = std::array<int, 5>;
inline constexpr std::array<int, 5> kWeights = {2, 2, 3, 3, 1};

inline int weighted_degree(const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += kWeights[i] * m[i];
  return d;
}

/// Normal-form monomials X^a Y^b W1^c1 W2^c2 U^c3 (c in {0,1}) of degree d,
/// in lexicographic order of exponents. U only if with_u.
std::vector<Monomial> normal_basis(int degree, bool with_u);

/// k[X,Y,W1,W2]/(W1^2 - B1, W2^2 - B2) for a genus-2 curve with an even theta
/// characteristic (B1 B2 = 0 are the six branch points), optionally with the
/// degree-1 generator U, U^2 = L, of the canonical double cover. B1, B2 are
/// binary cubics and L is linear in X, Y; the coefficient of x^a in a form of
/// twist m multiplies X^a Y^(m-a).
template <Field F>
class Genus2ThetaRing {
 public:
  using Element = std::map<Monomial, F>;

  Genus2ThetaRing(BinaryForm<F> b1, BinaryForm<F> b2, BinaryForm<F> l, bool includes_cover)
      : b1_(std::move(b1)), b2_(std::move(b2)), l_(std::move(l)), cover_(includes_cover) {
    if (b1_.twist() != 3 || b2_.twist() != 3) throw TwistMismatch("theta ring: B1, B2 must be cubics");
    if (l_.twist() != 1) throw TwistMismatch("theta ring: L must be linear");
    const BinaryForm<F> prod = b1_ * b2_;
    if (prod.is_zero() || arith::squarefree_part(prod).repeated_roots_detected)
      throw DataError("theta ring: B1 B2 is not squarefree");
  }

  const BinaryForm<F>& b1() const { return b1_; }
  const BinaryForm<F>& b2() const { return b2_; }
  const BinaryForm<F>& l() const { return l_; }
  bool includes_cover() const { return cover_; }
  const typename F::Context& context() const { return b1_.context(); }

  /// Number of normal-form monomials of the given degree.
  std::size_t hilbert_dim(int degree) const {
    return degree < 0 ? 0 : normal_basis(degree, cover_).size();
  }

  static Element monomial(const Monomial& m, const F& c) { return Element{{m, c}}; }

  static Element multiply(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Monomial m;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        add_term(out, m, ca * cb);
      }
    return out;
  }

  /// Rewrites with W1^2 -> B1, W2^2 -> B2, U^2 -> L until no rule applies.
  /// With an rng, each step picks a random applicable (term, rule) pair;
  /// otherwise terms are processed in map order with rules in order W1, W2, U.
  Element normal_form(Element e, arith::Rng* rng = nullptr) const {
    while (true) {
      std::vector<std::pair<Monomial, int>> moves;
      for (const auto& [m, c] : e)
        for (int rule = 0; rule < 3; ++rule)
          if (m[2 + rule] >= 2) {
            moves.emplace_back(m, rule);
            if (!rng) break;
          }
      if (moves.empty()) return e;
      const auto& [m, rule] = rng ? moves[arith::uniform_below(*rng, moves.size())] : moves.front();
      apply_rule(e, m, rule);
    }
  }

  /// Whether products of d_target / d_gen normal-form monomials of degree
  /// d_gen span the degree-d_target piece. False when d_gen does not divide
  /// d_target, since only sums of d_gen reach d_target.
  bool generation_in_degree(int d_gen, int d_target) const {
    if (!cover_) throw PreconditionError("generation_in_degree: ring lacks the cover generator U");
    if (d_gen <= 0 || d_target <= 0) throw PreconditionError("generation_in_degree: degrees must be positive");
    if (d_target % d_gen != 0) return false;
    return generation_rank(d_gen, d_target) == hilbert_dim(d_target);
  }

  /// Rank of the span of all (d_target / d_gen)-fold products of degree-d_gen
  /// basis monomials inside the degree-d_target piece.
  std::size_t generation_rank(int d_gen, int d_target) const {
    const auto gens = normal_basis(d_gen, cover_);
    const auto target = normal_basis(d_target, cover_);
    const int factors = d_target / d_gen;
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = i;

    std::vector<Element> products;
    std::vector<std::size_t> pick(static_cast<std::size_t>(factors), 0);
    // nondecreasing index tuples = multisets of generators
    while (true) {
      Element prod = monomial(Monomial{}, context().one());
      for (std::size_t i : pick) prod = multiply(prod, monomial(gens[i], context().one()));
      products.push_back(normal_form(std::move(prod)));
      int pos = factors - 1;
      while (pos >= 0 && pick[pos] + 1 == gens.size()) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int j = pos + 1; j < factors; ++j) pick[j] = pick[pos];
    }
    arith::Matrix<F> m(context(), products.size(), target.size());
    for (std::size_t r = 0; r < products.size(); ++r)
      for (const auto& [mono, c] : products[r]) m(r, index.at(mono)) = c;
    return m.rank();
  }

 private:
  static void add_term(Element& e, const Monomial& m, const F& c) {
    auto [it, inserted] = e.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }

  void apply_rule(Element& e, const Monomial& m, int rule) const {
    const F c = e.at(m);
    e.erase(m);
    const BinaryForm<F>& rhs = rule == 0 ? b1_ : rule == 1 ? b2_ : l_;
    // a binary form of twist t in X, Y has weighted degree 2t
    Monomial rest = m;
    rest[2 + rule] -= 2;
    for (int a = 0; a <= rhs.twist(); ++a) {
      if (rhs[a].is_zero()) continue;
      Monomial t = rest;
      t[0] += a;
      t[1] += rhs.twist() - a;
      add_term(e, t, c * rhs[a]);
    }
  }

  BinaryForm<F> b1_;
  BinaryForm<F> b2_;
  BinaryForm<F> l_;
  bool cover_;
};

/// Random fixture over F_p: B1, B2 random cubics with B1 B2 squarefree of
/// degree 6 in the affine chart (so no branch point at infinity), L random.
Genus2ThetaRing<arith::Fp> random_theta_ring(const arith::PrimeField& field, arith::Rng& rng,
                                              bool includes_cover);

}  // namespace higgs::covers
