#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "higgs/arith/binary_form.hpp"
#include "higgs/arith/resultant.hpp"

namespace higgs::spectral {

using arith::BinaryForm;
using arith::Field;

/// Coefficients (s_1, ..., s_n) of chi = T^n + s_1 T^(n-1) + ... + s_n,
/// s_i a section of O(ik). Never normalized behind the caller's back.
template <Field F>
class SpectralData {
 public:
  using Context = typename F::Context;

  SpectralData(int k, std::vector<BinaryForm<F>> s) : k_(k), s_(std::move(s)) {
    if (s_.empty()) throw DataError("spectral data: n must be positive");
    if (k_ <= 0) throw DataError("spectral data: k must be positive");
    for (std::size_t i = 0; i < s_.size(); ++i) {
      const int want = static_cast<int>(i + 1) * k_;
      if (s_[i].twist() != want)
        throw TwistMismatch("s_" + std::to_string(i + 1) + " needs twist " + std::to_string(want) +
                            ", got " + std::to_string(s_[i].twist()));
    }
  }

  /// All s_i = 0, i.e. chi = T^n.
  static SpectralData zero(Context ctx, int n, int k) {
    std::vector<BinaryForm<F>> s;
    for (int i = 1; i <= n; ++i) s.emplace_back(ctx, i * k);
    return SpectralData(k, std::move(s));
  }

  int n() const { return static_cast<int>(s_.size()); }
  int k() const { return k_; }
  const Context& context() const { return s_.front().context(); }
  /// s_i for 1 <= i <= n.
  const BinaryForm<F>& s(int i) const { return s_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<BinaryForm<F>>& coefficients() const { return s_; }

  /// chi as a polynomial in T with form coefficients (T of weight k).
  arith::TPoly<F> chi() const {
    std::vector<BinaryForm<F>> c;
    for (int i = n(); i >= 1; --i) c.push_back(s(i));
    c.push_back(BinaryForm<F>::constant(context().one()));
    return arith::TPoly<F>(std::move(c));
  }

  /// The same data read in the chart at infinity.
  SpectralData chart_swap() const {
    std::vector<BinaryForm<F>> c;
    for (const auto& f : s_) c.push_back(f.chart_swap());
    return SpectralData(k_, std::move(c));
  }

  friend bool operator==(const SpectralData&, const SpectralData&) = default;

 private:
  int k_;
  std::vector<BinaryForm<F>> s_;
};

}  // namespace higgs::spectral
