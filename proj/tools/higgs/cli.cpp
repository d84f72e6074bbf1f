#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "higgs/arith/random.hpp"
#include "higgs/covers/gonality.hpp"
#include "higgs/detquartic/fixture.hpp"
#include "higgs/hitchin/sampling.hpp"
#include "higgs/io/json.hpp"
#include "higgs/spectral/char_poly.hpp"
#include "higgs/spectral/formulas.hpp"

namespace higgs::cli {

using nlohmann::json;
using arith::Fp;
using arith::PrimeField;
using arith::Rational;
using arith::RationalField;

Environment process_environment() {
  Environment env;
  if (const char* p = std::getenv("HIGGS_PRIME"); p && *p) env.default_prime = p;
  if (const char* l = std::getenv("HIGGS_LOG"); l && *l) env.log_path = l;
  return env;
}

namespace {

struct HelpRequested {
  std::string text;
};

struct Globals {
  std::uint32_t prime = 1009;
  std::uint64_t seed = 1;
  int samples = 10;
  int threads = 1;
  std::string out;
  std::string format = "json";
  bool no_timestamp = false;
};

arith::BinaryForm<Fp> form_arg(const PrimeField& field, const std::string& text, const std::string& name) {
  try {
    return arith::parse_form<Fp>(field, text);
  } catch (const DataError& e) {
    throw DataError(name + ": " + e.what());
  }
}

json read_json_file(const std::string& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw DataError(name + ": cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(name + ": " + e.what());
  }
}

spectral::SplittingType splitting_type_arg(const std::vector<int>& e, std::vector<int> m) {
  if (m.empty()) m.assign(e.size(), 1);
  try {
    return spectral::SplittingType(e, m);
  } catch (const DataError& err) {
    throw DataError(std::string("--e/--m: ") + err.what());
  }
}

/// Scalar leaves as "path: value" lines.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    if (scalars) {
      std::string v;
      for (const auto& x : j) v += (v.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
      out.emplace_back(prefix, v);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render(const json& payload, const std::string& format) {
  if (format == "json") return payload.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(payload, "", rows);
  std::ostringstream s;
  if (format == "csv") {
    s << "key,value\n";
    for (const auto& [k, v] : rows) s << csv_field(k) << "," << csv_field(v) << "\n";
  } else {
    for (const auto& [k, v] : rows) s << k << ": " << v << "\n";
  }
  return s.str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Parameters actually given to the leaf command, plus the resolved globals.
json collect_params(const CLI::App* leaf, const Globals& g) {
  json p = {{"prime", g.prime}, {"seed", g.seed}, {"samples", g.samples}, {"threads", g.threads}};
  for (const CLI::Option* opt : leaf->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string name = opt->get_name();
    name.erase(0, name.find_first_not_of('-'));
    const auto& r = opt->results();
    if (opt->get_expected_max() == 0) p[name] = true;
    else if (r.size() == 1) p[name] = r.front();
    else p[name] = r;
  }
  return p;
}

}  // namespace

Invocation execute(const std::vector<std::string>& args, const Environment& env) {
  CLI::App app{"Spectral curves, Higgs fields and theta characteristics over prime fields", "higgs"};
  app.require_subcommand(1);
  Globals g;
  if (env.default_prime) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(*env.default_prime, &used);
      if (used != env.default_prime->size()) throw std::invalid_argument("trailing text");
      g.prime = static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("HIGGS_PRIME", "not an integer: '" + *env.default_prime + "'");
    }
  }
  app.add_option("--prime", g.prime, "Prime field characteristic (env HIGGS_PRIME, default 1009)");
  app.add_option("--seed", g.seed, "Master seed for random samples");
  app.add_option("--samples", g.samples, "Number of random samples");
  app.add_option("--threads", g.threads, "Worker threads for sampling and point searches")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Append an experiment record to this JSONL file (env HIGGS_LOG)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit timestamp and elapsed time from the record");

  std::string command;
  const CLI::App* leaf = nullptr;
  std::function<json()> action;
  auto group = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->require_subcommand(1)->fallthrough();
    return s;
  };
  auto sub = [&](CLI::App* parent, const char* name, const char* desc, std::function<json()> fn) {
    auto* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    s->callback([&command, &leaf, &action, s, parent, fn] {
      command = parent->get_name() + " " + s->get_name();
      leaf = s;
      action = fn;
    });
    return s;
  };
  auto field = [&] { return PrimeField(g.prime); };

  // ---- spectral
  auto* spectral_cmd = group("spectral", "Characteristic polynomials, discriminants, branching, genus");
  std::vector<int> e, m;
  int k = 1;
  std::vector<std::string> entries, s_forms;
  std::string input;
  bool random = false;
  auto spectral_input = [&]() -> spectral::SpectralData<Fp> {
    const auto f = field();
    if (!input.empty()) return io::spectral_data_from_json<Fp>(f, read_json_file(input, "--input"));
    if (s_forms.empty()) throw DataError("--s: give s_1, ..., s_n as forms or use --input");
    std::vector<arith::BinaryForm<Fp>> s;
    for (std::size_t i = 0; i < s_forms.size(); ++i)
      s.push_back(form_arg(f, s_forms[i], "--s[" + std::to_string(i + 1) + "]"));
    try {
      return spectral::SpectralData<Fp>(k, std::move(s));
    } catch (const DataError& err) {
      throw DataError(std::string("--s: ") + err.what());
    }
  };
  auto add_spectral_input = [&](CLI::App* c) {
    c->add_option("--k", k, "Twist k of N = O(k)");
    c->add_option("--s", s_forms, "s_1, ..., s_n as \"poly; twist=m\" (repeat)");
    c->add_option("--input", input, "JSON file with {\"k\":..,\"s\":[..]}");
  };

  auto* charpoly = sub(spectral_cmd, "charpoly", "Characteristic polynomial of a twisted endomorphism", [&]() -> json {
    const auto f = field();
    std::optional<spectral::TwistedEndo<Fp>> phi;
    if (!input.empty()) {
      phi = io::twisted_endo_from_json<Fp>(f, read_json_file(input, "--input"));
    } else {
      if (e.empty()) throw DataError("--e: splitting type required without --input");
      const auto st = splitting_type_arg(e, m);
      if (random) {
        phi = hitchin::random_endo(st, k, f, g.seed);
      } else {
        phi.emplace(f, st, k);
        const auto n = static_cast<std::size_t>(st.n());
        if (entries.size() != n * n)
          throw DataError("--entry: expected " + std::to_string(n * n) + " entries in row-major order, got " +
                          std::to_string(entries.size()));
        for (std::size_t i = 0; i < n * n; ++i) {
          const std::string name = "--entry[" + std::to_string(i + 1) + "]";
          try {
            phi->set(i / n, i % n, form_arg(f, entries[i], name));
          } catch (const TwistMismatch& err) {
            throw TwistMismatch(name + ": " + err.what());
          }
        }
      }
    }
    return {{"phi", io::to_json(*phi)}, {"char_poly", io::to_json(spectral::char_poly(*phi))}};
  });
  charpoly->add_option("--e", e, "Distinct twists e_1 < ... < e_l")->delimiter(',');
  charpoly->add_option("--m", m, "Multiplicities (default all 1)")->delimiter(',');
  charpoly->add_option("--k", k, "Twist k of N = O(k)");
  charpoly->add_option("--entry", entries, "Entries as \"poly; twist=t\", row-major (repeat)");
  charpoly->add_flag("--random", random, "Use a random phi drawn from --seed");
  charpoly->add_option("--input", input, "JSON file with a twisted endomorphism");

  add_spectral_input(sub(spectral_cmd, "disc", "Discriminant of spectral data", [&]() -> json {
    const auto s = spectral_input();
    return {{"spectral_data", io::to_json(s)}, {"discriminant", io::to_json(spectral::discriminant(s))}};
  }));
  add_spectral_input(sub(spectral_cmd, "classify", "Branching classification of spectral data", [&]() -> json {
    const auto s = spectral_input();
    return {{"spectral_data", io::to_json(s)}, {"branching", io::to_json(spectral::classify_branching(s))}};
  }));
  int n_sheets = 2;
  int g_base = 0;
  auto* genus_cmd = sub(spectral_cmd, "genus", "Genus of a spectral curve of degree n in O(k)", [&]() -> json {
    return {{"n", n_sheets}, {"k", k}, {"g_base", g_base}, {"genus", spectral::genus(n_sheets, k, g_base)}};
  });
  genus_cmd->add_option("--n", n_sheets, "Degree of the cover")->required();
  genus_cmd->add_option("--k", k, "Degree of N")->required();
  genus_cmd->add_option("--g-base", g_base, "Genus of the base curve (default 0)");

  // ---- hitchin
  auto* hitchin_cmd = group("hitchin", "Dimension formulas and rank experiments");
  auto add_type = [&](CLI::App* c) {
    c->add_option("--e", e, "Distinct twists e_1 < ... < e_l")->delimiter(',')->required();
    c->add_option("--m", m, "Multiplicities (default all 1)")->delimiter(',');
    c->add_option("--k", k, "Twist k of N = O(k)")->required();
  };
  add_type(sub(hitchin_cmd, "dims", "Expected dimensions for a splitting type", [&]() -> json {
    return io::to_json(hitchin::expected_dims(splitting_type_arg(e, m), k));
  }));
  add_type(sub(hitchin_cmd, "experiment", "Rank of the Hitchin differential at random points", [&]() -> json {
    return io::to_json(hitchin::run_rank_experiment(splitting_type_arg(e, m), k, field().modulus(), g.seed, g.samples,
                                                    g.threads));
  }));

  // ---- covers
  auto* covers_cmd = group("covers", "Genus-2 theta rings, gonality table, Brill-Noether numbers");
  std::string b1_text, b2_text, l_text;
  int max_degree = 12;
  int d_gen = 3, d_target = 6;
  auto theta_ring = [&](bool cover) {
    const auto f = field();
    if (b1_text.empty() && b2_text.empty() && l_text.empty()) {
      arith::Rng rng(g.seed);
      return covers::random_theta_ring(f, rng, cover);
    }
    if (b1_text.empty() || b2_text.empty() || l_text.empty()) throw DataError("--b1/--b2/--l: give all three or none");
    return covers::Genus2ThetaRing<Fp>(form_arg(f, b1_text, "--b1"), form_arg(f, b2_text, "--b2"),
                                       form_arg(f, l_text, "--l"), cover);
  };
  auto add_ring = [&](CLI::App* c) {
    c->add_option("--b1", b1_text, "Cubic B1 as \"poly; twist=3\" (default: random from --seed)");
    c->add_option("--b2", b2_text, "Cubic B2");
    c->add_option("--l", l_text, "Linear form L of the double cover");
  };
  auto* hilbert = sub(covers_cmd, "hilbert", "Hilbert functions of R_theta and of the cover ring", [&]() -> json {
    if (max_degree < 0) throw PreconditionError("--max-degree must be nonnegative");
    const auto ring = theta_ring(false);
    const covers::Genus2ThetaRing<Fp> cover(ring.b1(), ring.b2(), ring.l(), true);
    json rows = json::array();
    for (int d = 0; d <= max_degree; ++d)
      rows.push_back({{"degree", d}, {"theta", ring.hilbert_dim(d)}, {"cover", cover.hilbert_dim(d)}});
    return {{"b1", io::to_json(ring.b1())}, {"b2", io::to_json(ring.b2())}, {"l", io::to_json(ring.l())}, {"rows", rows}};
  });
  add_ring(hilbert);
  hilbert->add_option("--max-degree", max_degree, "Largest degree (default 12)");
  auto* generation = sub(covers_cmd, "generation", "Whether degree-d_gen elements generate degree d_target", [&]() -> json {
    const auto ring = theta_ring(true);
    const std::size_t rank = d_target % d_gen == 0 && d_gen > 0 ? ring.generation_rank(d_gen, d_target) : 0;
    return {{"d_gen", d_gen},
            {"d_target", d_target},
            {"rank", rank},
            {"hilbert_dim", ring.hilbert_dim(d_target)},
            {"generated", ring.generation_in_degree(d_gen, d_target)}};
  });
  add_ring(generation);
  generation->add_option("--d-gen", d_gen, "Degree of the generators (default 3)");
  generation->add_option("--d-target", d_target, "Target degree (default 6)");
  int genus_g = -1, g_max = 20, r_bn = 1, d_bn = 0;
  std::string theta;
  auto* table = sub(covers_cmd, "gonality-table", "Predicted gonality of a general canonical cover", [&]() -> json {
    std::vector<covers::ThetaParity> parities;
    if (theta.empty()) {
      parities = {covers::ThetaParity::even, covers::ThetaParity::odd};
    } else {
      const auto p = covers::parse_parity(theta);
      if (!p) throw DataError("--theta: expected 'even' or 'odd', got '" + theta + "'");
      parities = {*p};
    }
    json rows = json::array();
    const int lo = genus_g >= 0 ? genus_g : 2, hi = genus_g >= 0 ? genus_g : g_max;
    for (int gg = lo; gg <= hi; ++gg)
      for (auto p : parities) {
        const auto v = covers::gonality_prediction(gg, p);
        rows.push_back({{"g", gg}, {"theta", covers::to_string(p)}, {"gonality", v ? json(*v) : json(nullptr)}});
      }
    if (genus_g >= 0 && parities.size() == 1) return rows.front();
    return {{"rows", rows}};
  });
  table->add_option("--g", genus_g, "Genus of the base curve (default: table for 2..--g-max)");
  table->add_option("--g-max", g_max, "Largest genus of the table (default 20)");
  table->add_option("--theta", theta, "Parity of the theta characteristic: even or odd");
  auto* bn = sub(covers_cmd, "bn", "Brill-Noether number rho(g, r, d)", [&]() -> json {
    return {{"g", genus_g}, {"r", r_bn}, {"d", d_bn}, {"rho", covers::bn_number(genus_g, r_bn, d_bn)}};
  });
  bn->add_option("--g", genus_g, "Genus")->required();
  bn->add_option("--r", r_bn, "Rank r")->required();
  bn->add_option("--d", d_bn, "Degree d")->required();

  // ---- quartic
  auto* quartic_cmd = group("quartic", "Determinantal plane quartics and theta characteristics");
  std::string fixture = "beauville-genus3";
  std::size_t qi = 0, qj = 0, qk = 0, ql = 0;
  int e_max = 2;
  auto load = [&] { return detquartic::load_fixture(fixture); };
  auto add_fixture = [&](CLI::App* c) { c->add_option("--fixture", fixture, "Fixture name or JSON path (default beauville-genus3)"); };
  auto check_index = [](std::size_t v, std::size_t d, const char* name) {
    if (v < 1 || v > d)
      throw PreconditionError(std::string(name) + ": index " + std::to_string(v) + " out of range 1.." + std::to_string(d));
  };
  add_fixture(sub(quartic_cmd, "det", "Determinant of the fixture matrix over Q", [&]() -> json {
    const auto fx = load();
    const auto det = detquartic::det_form(detquartic::fixture_matrix<Rational>(fx, RationalField{}));
    return {{"fixture", fx.name}, {"degree", det.degree()}, {"det", io::to_json(det)}};
  }));
  auto* cof_cmd = sub(quartic_cmd, "cofactors", "Minors det M_ij over Q", [&]() -> json {
    const auto fx = load();
    const auto mat = detquartic::fixture_matrix<Rational>(fx, RationalField{});
    const auto all = detquartic::all_cofactors(mat);
    json rows = json::array();
    for (std::size_t i = 1; i <= mat.d(); ++i)
      for (std::size_t j = 1; j <= mat.d(); ++j) {
        if ((qi && qi != i) || (qj && qj != j)) continue;
        rows.push_back({{"i", i}, {"j", j}, {"minor", io::to_json(all[(i - 1) * mat.d() + j - 1])}});
      }
    if (qi) check_index(qi, mat.d(), "--i");
    if (qj) check_index(qj, mat.d(), "--j");
    return {{"fixture", fx.name}, {"cofactors", rows}};
  });
  add_fixture(cof_cmd);
  cof_cmd->add_option("--i", qi, "Only row i");
  cof_cmd->add_option("--j", qj, "Only column j");
  auto* adj = sub(quartic_cmd, "adjugate-check", "det M divides det M_ij det M_kl - det M_il det M_kj", [&]() -> json {
    const auto fx = load();
    const auto mat = detquartic::fixture_matrix<Rational>(fx, RationalField{});
    const std::size_t d = mat.d();
    const auto det = detquartic::det_form(mat);
    const auto cof = detquartic::all_cofactors(mat);
    const bool single = qi || qj || qk || ql;
    if (single) {
      check_index(qi, d, "--i");
      check_index(qj, d, "--j");
      check_index(qk, d, "--k");
      check_index(ql, d, "--l");
    }
    std::size_t checked = 0, passed = 0;
    json failures = json::array();
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t j = 1; j <= d; ++j)
        for (std::size_t kk = 1; kk <= d; ++kk)
          for (std::size_t l = 1; l <= d; ++l) {
            if (single && (i != qi || j != qj || kk != qk || l != ql)) continue;
            ++checked;
            if (detquartic::adjugate_identity_holds(cof, det, d, i, j, kk, l)) ++passed;
            else failures.push_back({i, j, kk, l});
          }
    return {{"fixture", fx.name}, {"checked", checked}, {"passed", passed}, {"failures", failures}};
  });
  add_fixture(adj);
  adj->add_option("--i", qi, "Index i (default: all quadruples)");
  adj->add_option("--j", qj, "Index j");
  adj->add_option("--k", qk, "Index k");
  adj->add_option("--l", ql, "Index l");
  add_fixture(sub(quartic_cmd, "rank-drop", "Points of P^2(F_p) where (M | r) drops rank", [&]() -> json {
    const auto fx = load();
    const auto f = field();
    if (f.modulus() == 2) throw PreconditionError("--prime: rank-drop search needs an odd prime");
    const auto pts = detquartic::rank_drop_points(detquartic::fixture_augmented<Fp>(fx, f), g.threads);
    return {{"fixture", fx.name}, {"prime", f.modulus()}, {"count", pts.size()}, {"points", io::points_to_json(pts)}};
  }));
  auto* smooth = sub(quartic_cmd, "smooth-check", "Search for singular points of det M over F_{p^e}", [&]() -> json {
    const auto fx = load();
    const auto f = field();
    const auto det = detquartic::det_form(detquartic::fixture_matrix<Fp>(fx, f));
    json j = io::to_json(detquartic::smooth_plane_curve_check(det, e_max));
    j["fixture"] = fx.name;
    j["e_max"] = e_max;
    return j;
  });
  add_fixture(smooth);
  smooth->add_option("--e-max", e_max, "Largest extension degree searched (default 2)");

  // ---- replay
  std::string log_path;
  std::size_t line_no = 0;
  auto* replay = app.add_subcommand("replay", "Re-run a logged record and compare payloads");
  replay->fallthrough();
  replay->add_option("--log", log_path, "JSONL log")->required();
  replay->add_option("--line", line_no, "1-based record number (default: last)");
  replay->callback([&] {
    command = "replay";
    leaf = replay;
    action = [&]() -> json {
      std::ifstream in(log_path);
      if (!in) throw DataError("--log: cannot open '" + log_path + "'");
      std::vector<std::string> lines;
      for (std::string l; std::getline(in, l);)
        if (!l.empty()) lines.push_back(l);
      if (lines.empty()) throw DataError("--log: no records in '" + log_path + "'");
      const std::size_t idx = line_no ? line_no : lines.size();
      if (idx > lines.size()) throw DataError("--line: log has only " + std::to_string(lines.size()) + " records");
      json rec;
      try {
        rec = json::parse(lines[idx - 1]);
      } catch (const json::parse_error& err) {
        throw DataError("--log: record " + std::to_string(idx) + ": " + err.what());
      }
      for (const char* key : {"schema_version", "argv", "params", "payload"})
        if (!rec.contains(key)) throw DataError("--log: record " + std::to_string(idx) + " lacks field '" + key + "'");
      if (rec["schema_version"] != io::kSchemaVersion)
        throw DataError("--log: unsupported schema_version " + rec["schema_version"].dump());
      std::vector<std::string> argv;
      const auto& raw = rec["argv"];
      for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::string a = raw[i].get<std::string>();
        if (a == "--no-timestamp") continue;
        if (a == "--out" || a == "--format") {
          ++i;
          continue;
        }
        if (a.rfind("--out=", 0) == 0 || a.rfind("--format=", 0) == 0) continue;
        argv.push_back(a);
      }
      Environment replay_env;
      replay_env.default_prime = std::to_string(rec["params"].at("prime").get<std::uint32_t>());
      const Invocation again = execute(argv, replay_env);
      const bool match = again.payload == rec["payload"];
      if (!match) throw DataError("replay: payload of record " + std::to_string(idx) + " (" + again.command + ") differs");
      return {{"record", idx}, {"command", again.command}, {"match", true}};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  }
  if (!action) throw CLI::CallForHelp();
  if (command != "replay") {
    try {
      field();
    } catch (const DataError& e) {
      throw DataError(std::string("--prime: ") + e.what());
    }
  }

  Invocation inv;
  inv.command = command;
  inv.argv = args;
  inv.params = collect_params(leaf, g);
  inv.format = g.format;
  inv.out_path = g.out;
  inv.timestamp = !g.no_timestamp;
  inv.payload = action();
  return inv;
}

std::string record_line(const Invocation& inv, double elapsed_ms) {
  json rec = {{"schema_version", io::kSchemaVersion},
              {"command", inv.command},
              {"argv", inv.argv},
              {"params", inv.params},
              {"payload", inv.payload}};
  rec["timestamp"] = inv.timestamp ? json(utc_timestamp()) : json(nullptr);
  rec["elapsed_ms"] = inv.timestamp ? json(elapsed_ms) : json(nullptr);
  return rec.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  try {
    const auto start = std::chrono::steady_clock::now();
    Invocation inv = execute(args, env);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << render(inv.payload, inv.format);
    std::string log = inv.out_path;
    if (log.empty() && env.log_path && inv.command != "replay") log = *env.log_path;
    if (!log.empty()) {
      std::ofstream f(log, std::ios::app);
      if (!f) {
        err << "error: --out: cannot open '" << log << "' for appending\n";
        return exit_code::data;
      }
      f << record_line(inv, elapsed) << "\n";
    }
    return exit_code::ok;
  } catch (const HelpRequested& h) {
    out << h.text;
    return exit_code::ok;
  } catch (const CLI::CallForHelp&) {
    err << "error: a subcommand is required (try --help)\n";
    return exit_code::usage;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::data;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::precondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  }
}

}  // namespace higgs::cli
