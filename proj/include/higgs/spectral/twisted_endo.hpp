#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "higgs/arith/binary_form.hpp"
#include "higgs/arith/form_matrix.hpp"
#include "higgs/spectral/splitting_type.hpp"

namespace higgs::spectral {

using arith::BinaryForm;
using arith::Field;

/// phi: E -> E(k) for E of the given splitting type, stored as an n x n
/// matrix over the expanded twists. Entry (r, c) maps O(e~_c) to O(e~_r + k),
/// so it is a form of twist e~_r - e~_c + k (structurally zero when negative).
/// k = 0 gives End(E), which is lower block triangular.
template <Field F>
class TwistedEndo {
 public:
  using Context = typename F::Context;

  /// The zero map.
  TwistedEndo(Context ctx, SplittingType st, int k)
      : st_(std::move(st)), k_(k), m_(ctx, n(), n(), profile(st_, k)) {
    if (k < 0) throw DataError("twisted endomorphism: k must be nonnegative");
  }

  static TwistedEndo identity(Context ctx, SplittingType st) {
    TwistedEndo id(ctx, std::move(st), 0);
    for (std::size_t r = 0; r < id.n(); ++r) id.set(r, r, BinaryForm<F>::constant(ctx.one()));
    return id;
  }

  /// f * id_E, with k = twist(f).
  static TwistedEndo scalar(SplittingType st, const BinaryForm<F>& f) {
    TwistedEndo out(f.context(), std::move(st), f.twist());
    for (std::size_t r = 0; r < out.n(); ++r) out.set(r, r, f);
    return out;
  }

  const SplittingType& splitting_type() const { return st_; }
  int k() const { return k_; }
  std::size_t n() const { return static_cast<std::size_t>(st_.n()); }
  const Context& context() const { return m_(0, 0).context(); }

  int twist_at(std::size_t r, std::size_t c) const { return m_.twist_at(r, c); }
  const BinaryForm<F>& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  /// Throws TwistMismatch if f has the wrong twist.
  void set(std::size_t r, std::size_t c, BinaryForm<F> f) { m_.set(r, c, std::move(f)); }
  /// Row-major entries.
  const std::vector<BinaryForm<F>>& entries() const { return m_.entries(); }

  /// Number of free coefficients, sum of h0 over all entries.
  std::size_t coordinate_dim() const {
    std::size_t total = 0;
    for (int t : m_.profile()) total += static_cast<std::size_t>(arith::h0(t));
    return total;
  }

  friend TwistedEndo operator+(const TwistedEndo& a, const TwistedEndo& b) {
    a.check_compatible(b, "+");
    TwistedEndo r = a;
    for (std::size_t i = 0; i < a.n(); ++i)
      for (std::size_t j = 0; j < a.n(); ++j) r.set(i, j, a(i, j) + b(i, j));
    return r;
  }
  friend TwistedEndo operator-(const TwistedEndo& a, const TwistedEndo& b) {
    a.check_compatible(b, "-");
    TwistedEndo r = a;
    for (std::size_t i = 0; i < a.n(); ++i)
      for (std::size_t j = 0; j < a.n(); ++j) r.set(i, j, a(i, j) - b(i, j));
    return r;
  }
  /// Composition; twists add.
  friend TwistedEndo operator*(const TwistedEndo& a, const TwistedEndo& b) {
    if (!(a.st_ == b.st_)) throw DataError("twisted endomorphism product: splitting types differ");
    TwistedEndo r(a.context(), a.st_, a.k_ + b.k_);
    const std::size_t n = a.n();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BinaryForm<F> acc(a.context(), r.twist_at(i, j));
        if (acc.twist() >= 0)
          for (std::size_t l = 0; l < n; ++l) {
            if (a(i, l).twist() < 0 || b(l, j).twist() < 0) continue;
            acc += a(i, l) * b(l, j);
          }
        r.set(i, j, std::move(acc));
      }
    return r;
  }

  friend bool operator==(const TwistedEndo& a, const TwistedEndo& b) {
    return a.st_ == b.st_ && a.k_ == b.k_ && a.m_ == b.m_;
  }

  static std::vector<int> profile(const SplittingType& st, int k) {
    const auto& eb = st.expanded();
    std::vector<int> out;
    for (int er : eb)
      for (int ec : eb) out.push_back(er - ec + k);
    return out;
  }

 private:
  void check_compatible(const TwistedEndo& b, const char* op) const {
    if (!(st_ == b.st_) || k_ != b.k_)
      throw TwistMismatch(std::string("twisted endomorphism ") + op + ": incompatible operands");
  }

  SplittingType st_;
  int k_;
  arith::FormMatrix<F> m_;
};

}  // namespace higgs::spectral
