#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "higgs/arith/fp.hpp"
#include "higgs/arith/fq.hpp"
#include "higgs/detquartic/linear_matrix.hpp"

namespace higgs::detquartic {

using arith::Fp;
using arith::Fq;

/// Point of P^2(F_p) with its last nonzero coordinate equal to 1.
using PlanePoint = std::array<std::uint32_t, 3>;

/// Normalizes a nonzero vector; PreconditionError for the zero vector.
PlanePoint normalize(const std::array<Fp, 3>& v);

/// Points of P^2(F_p), p the field of `a`, at which the d x (d+1) matrix
/// (M | r) has rank below d. All p^2 + p + 1 points are tried; the result is
/// sorted lexicographically and does not depend on `threads`.
std::vector<PlanePoint> rank_drop_points(const AugmentedMat<Fp>& a, int threads = 1);

/// Points of P^2(F_p) on V(f).
std::vector<PlanePoint> rational_points(const TernaryForm<Fp>& f);

enum class Smoothness { smooth_over_checked_fields, singular_point_found, inconclusive };
std::string to_string(Smoothness s);

struct SmoothnessReport {
  Smoothness status = Smoothness::inconclusive;
  std::uint32_t prime = 0;
  /// Largest e such that F_{p^e} was searched completely (0 if none).
  int checked_degree = 0;
  /// Witness and the field it lives in, when a singular point was found.
  std::optional<std::array<Fq, 3>> witness{};
  std::string witness_field{};
};

/// Brute-force search for common zeros of f and its three partials over
/// F_{p^e}, e = 1..e_max. Fields with more than max_field_size elements are
/// skipped, which makes a clean outcome inconclusive. A clean outcome only
/// covers the fields searched, not the algebraic closure.
SmoothnessReport smooth_plane_curve_check(const TernaryForm<Fp>& f, int e_max,
                                          std::uint64_t max_field_size = std::uint64_t{1} << 24);

}  // namespace higgs::detquartic
