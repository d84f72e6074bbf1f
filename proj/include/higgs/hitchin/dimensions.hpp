#pragma once

#include <cstdint>
#include <optional>

#include "higgs/spectral/splitting_type.hpp"

namespace higgs::hitchin {

using spectral::SplittingType;

/// dim Aut(E) = sum_{i <= j} (e_j - e_i + 1) m_i m_j.
std::int64_t aut_dim(const SplittingType& st);

/// h0(End(E) (x) O(k)) = sum_{i,j} h0(e_i - e_j + k) m_i m_j.
std::int64_t end_twist_dim(const SplittingType& st, int k);

/// sum_{i=1}^n h0(O(ik)) = n + k C(n+1, 2).
std::int64_t base_dim(int n, int k);

struct DimensionReport {
  SplittingType st;
  int k = 0;
  std::int64_t end_twist_dim = 0;
  std::int64_t aut_dim = 0;
  std::int64_t base_dim = 0;
  std::int64_t expected_general = 0;
  bool balanced_applicable = false;
  std::optional<std::int64_t> expected_balanced{};
  std::int64_t rho_prime = 0;
  std::int64_t genus = 0;
};

/// expected_general = h0(End(E)(k)) + 1 - dim Aut(E) - base_dim;
/// expected_balanced = g - sum_{i<j} (e_j - e_i - 1) m_i m_j when
/// e_1 - e_l + k >= -1; rho' = g - sum_{i<j} max(0, e~_j - e~_i - 1).
DimensionReport expected_dims(const SplittingType& st, int k);

}  // namespace higgs::hitchin
