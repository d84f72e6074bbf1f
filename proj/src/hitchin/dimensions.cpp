#include "higgs/hitchin/dimensions.hpp"

#include <algorithm>

#include "higgs/arith/binary_form.hpp"
#include "higgs/spectral/formulas.hpp"

namespace higgs::hitchin {

std::int64_t aut_dim(const SplittingType& st) {
  const auto& e = st.e();
  const auto& m = st.m();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j)
      total += static_cast<std::int64_t>(e[j] - e[i] + 1) * m[i] * m[j];
  return total;
}

std::int64_t end_twist_dim(const SplittingType& st, int k) {
  const auto& e = st.e();
  const auto& m = st.m();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      total += static_cast<std::int64_t>(arith::h0(e[i] - e[j] + k)) * m[i] * m[j];
  return total;
}

std::int64_t base_dim(int n, int k) { return n + k * spectral::binomial(n + 1, 2); }

DimensionReport expected_dims(const SplittingType& st, int k) {
  DimensionReport r{.st = st};
  r.k = k;
  r.end_twist_dim = end_twist_dim(st, k);
  r.aut_dim = aut_dim(st);
  r.base_dim = base_dim(st.n(), k);
  r.expected_general = r.end_twist_dim + 1 - r.aut_dim - r.base_dim;
  r.genus = spectral::genus(st.n(), k, 0);
  r.balanced_applicable = st.e().front() - st.e().back() + k >= -1;

  const auto& e = st.e();
  const auto& m = st.m();
  if (r.balanced_applicable) {
    std::int64_t gaps = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        gaps += static_cast<std::int64_t>(e[j] - e[i] - 1) * m[i] * m[j];
    r.expected_balanced = r.genus - gaps;
  }
  const auto& eb = st.expanded();
  std::int64_t h1 = 0;
  for (std::size_t i = 0; i < eb.size(); ++i)
    for (std::size_t j = i + 1; j < eb.size(); ++j) h1 += std::max(0, eb[j] - eb[i] - 1);
  r.rho_prime = r.genus - h1;
  return r;
}

}  // namespace higgs::hitchin
