#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "higgs/detquartic/linear_matrix.hpp"

namespace higgs::detquartic {

/// Integer data of a determinantal fixture, as stored in fixtures/*.json.
struct QuarticFixture {
  std::string name;
  std::vector<std::vector<std::array<std::int64_t, 3>>> matrix;
  std::vector<std::int64_t> column;
  /// Named points as printed in the source, unverified.
  std::map<std::string, std::array<std::int64_t, 3>> reported_points;
};

/// Loads a fixture from a path, or by name from the shipped fixture
/// directory ("beauville-genus3"). DataError on malformed content.
QuarticFixture load_fixture(const std::string& path_or_name);

/// Parses fixture JSON text; `origin` names it in diagnostics.
QuarticFixture parse_fixture(const std::string& json_text, const std::string& origin);

template <Field F>
SymLinMat<F> fixture_matrix(const QuarticFixture& fx, const typename F::Context& ctx) {
  std::vector<std::vector<LinearForm<F>>> rows;
  for (const auto& row : fx.matrix) {
    rows.emplace_back();
    for (const auto& c : row) rows.back().push_back({ctx.from_int(c[0]), ctx.from_int(c[1]), ctx.from_int(c[2])});
  }
  return SymLinMat<F>::from_rows(ctx, rows);
}

template <Field F>
AugmentedMat<F> fixture_augmented(const QuarticFixture& fx, const typename F::Context& ctx) {
  std::vector<F> col;
  for (auto c : fx.column) col.push_back(ctx.from_int(c));
  return AugmentedMat<F>(fixture_matrix<F>(fx, ctx), std::move(col));
}

}  // namespace higgs::detquartic
