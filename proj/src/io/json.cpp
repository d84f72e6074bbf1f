#include "higgs/io/json.hpp"

namespace higgs::io {

json to_json(const spectral::SplittingType& st) { return {{"e", st.e()}, {"m", st.m()}}; }

spectral::SplittingType splitting_type_from_json(const json& j) {
  auto ints = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw DataError(std::string("splitting type: missing array field '") + key + "'");
    std::vector<int> v;
    for (const auto& x : j[key]) {
      if (!x.is_number_integer()) throw DataError(std::string("splitting type: field '") + key + "' must hold integers");
      v.push_back(x.get<int>());
    }
    return v;
  };
  return spectral::SplittingType(ints("e"), ints("m"));
}

json to_json(const hitchin::DimensionReport& r) {
  json j = {{"splitting_type", to_json(r.st)},
            {"k", r.k},
            {"end_twist_dim", r.end_twist_dim},
            {"aut_dim", r.aut_dim},
            {"base_dim", r.base_dim},
            {"expected_general", r.expected_general},
            {"balanced_applicable", r.balanced_applicable},
            {"rho_prime", r.rho_prime},
            {"genus", r.genus}};
  j["expected_balanced"] = r.expected_balanced ? json(*r.expected_balanced) : json(nullptr);
  return j;
}

json to_json(const hitchin::RankExperiment& ex) {
  json samples = json::array();
  for (const auto& s : ex.samples) {
    json one = {{"seed", s.seed}, {"rank", s.rank}, {"orbit_dim", s.orbit_dim}};
    one["irreducible"] = s.irreducible ? json(*s.irreducible) : json(nullptr);
    samples.push_back(one);
  }
  return {{"dims", to_json(ex.dims)},
          {"prime", ex.prime},
          {"seed", ex.seed},
          {"samples", samples},
          {"max_rank", ex.max_rank},
          {"dominant", ex.dominant},
          {"empirical_fiber_dim", ex.empirical_fiber_dim}};
}

json points_to_json(const std::vector<detquartic::PlanePoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back({p[0], p[1], p[2]});
  return out;
}

json to_json(const detquartic::SmoothnessReport& r) {
  json j = {{"status", detquartic::to_string(r.status)}, {"prime", r.prime}, {"checked_degree", r.checked_degree}};
  if (r.witness) {
    j["witness"] = {(*r.witness)[0].to_string(), (*r.witness)[1].to_string(), (*r.witness)[2].to_string()};
    j["witness_field"] = r.witness_field;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace higgs::io
