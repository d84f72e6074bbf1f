#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "higgs/arith/text_format.hpp"
#include "higgs/covers/theta_ring.hpp"
#include "higgs/detquartic/points.hpp"
#include "higgs/hitchin/experiment.hpp"
#include "higgs/spectral/branching.hpp"
#include "higgs/spectral/spectral_data.hpp"
#include "higgs/spectral/twisted_endo.hpp"

namespace higgs::io {

// JSON views of the library's reports. Forms are written in the text syntax
// "poly; twist=m", field elements as canonical strings. Key order is fixed
// (nlohmann sorts object keys), so equal values serialize byte-identically.

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const spectral::SplittingType& st);
spectral::SplittingType splitting_type_from_json(const json& j);

json to_json(const hitchin::DimensionReport& r);
json to_json(const hitchin::RankExperiment& ex);
json to_json(const detquartic::SmoothnessReport& r);
json points_to_json(const std::vector<detquartic::PlanePoint>& pts);

template <arith::Field F>
json to_json(const arith::BinaryForm<F>& f) {
  return arith::to_text(f);
}

template <arith::Field F>
json to_json(const spectral::SpectralData<F>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(arith::to_text(c));
  return {{"field", s.context().describe()}, {"n", s.n()}, {"k", s.k()}, {"s", coeffs}};
}

/// s_1..s_n given as text forms; DataError names the offending entry.
template <arith::Field F>
spectral::SpectralData<F> spectral_data_from_json(const typename F::Context& ctx, const json& j) {
  if (!j.contains("k") || !j["k"].is_number_integer()) throw DataError("spectral data: missing integer field 'k'");
  if (!j.contains("s") || !j["s"].is_array()) throw DataError("spectral data: missing array field 's'");
  std::vector<arith::BinaryForm<F>> s;
  for (std::size_t i = 0; i < j["s"].size(); ++i) {
    if (!j["s"][i].is_string()) throw DataError("spectral data: field 's[" + std::to_string(i + 1) + "]' is not a string");
    try {
      s.push_back(arith::parse_form<F>(ctx, j["s"][i].get<std::string>()));
    } catch (const DataError& e) {
      throw DataError("spectral data: field 's[" + std::to_string(i + 1) + "]': " + e.what());
    }
  }
  return spectral::SpectralData<F>(j["k"].get<int>(), std::move(s));
}

template <arith::Field F>
json to_json(const spectral::TwistedEndo<F>& phi) {
  json rows = json::array();
  for (std::size_t r = 0; r < phi.n(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < phi.n(); ++c) row.push_back(arith::to_text(phi(r, c)));
    rows.push_back(row);
  }
  return {{"field", phi.context().describe()},
          {"splitting_type", to_json(phi.splitting_type())},
          {"k", phi.k()},
          {"entries", rows}};
}

/// Entries are text forms in row-major n x n layout; their twists must match
/// e~_r - e~_c + k.
template <arith::Field F>
spectral::TwistedEndo<F> twisted_endo_from_json(const typename F::Context& ctx, const json& j) {
  if (!j.contains("splitting_type")) throw DataError("twisted endomorphism: missing field 'splitting_type'");
  if (!j.contains("k") || !j["k"].is_number_integer()) throw DataError("twisted endomorphism: missing integer field 'k'");
  const auto st = splitting_type_from_json(j["splitting_type"]);
  spectral::TwistedEndo<F> phi(ctx, st, j["k"].get<int>());
  const auto n = static_cast<std::size_t>(st.n());
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != n)
    throw DataError("twisted endomorphism: field 'entries' must have " + std::to_string(n) + " rows");
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j["entries"][r];
    if (!row.is_array() || row.size() != n)
      throw DataError("twisted endomorphism: field 'entries' row " + std::to_string(r + 1) + " must have " +
                      std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const std::string where = "field 'entries[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]'";
      if (!row[c].is_string()) throw DataError("twisted endomorphism: " + where + " is not a string");
      try {
        phi.set(r, c, arith::parse_form<F>(ctx, row[c].get<std::string>()));
      } catch (const TwistMismatch& e) {
        throw TwistMismatch("twisted endomorphism: " + where + ": " + e.what());
      } catch (const DataError& e) {
        throw DataError("twisted endomorphism: " + where + ": " + e.what());
      }
    }
  }
  return phi;
}

template <arith::Field F>
json to_json(const spectral::BranchReport<F>& r) {
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back({{"location", p.location},
                   {"at_infinity", p.at_infinity},
                   {"multiplicity", p.multiplicity},
                   {"tag", spectral::to_string(p.tag)}});
  return {{"discriminant", arith::to_text(r.discriminant)}, {"squarefree", r.squarefree}, {"points", pts}};
}

template <arith::Field F>
json to_json(const detquartic::TernaryForm<F>& f) {
  return f.to_string();
}

}  // namespace higgs::io
