#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcpoly/serialization.hpp"
#include "bcpoly/verify.hpp"

namespace bcpoly::cli {

struct CommandRequest {
  std::string subcommand;
  std::string target;
  std::map<std::string, std::string> params;
  std::string output;
  std::optional<std::string> out_path;
};

struct RunReport {
  bool ok = true;
  std::vector<CheckResult> checks;
  std::vector<std::string> artifacts;
  double elapsed = 0;
};

/// Usage or precondition problem; reported on one line with exit code 2.
class UsageError : public Error {
public:
  using Error::Error;
};

struct HelpRequested {
  std::string text;
};

namespace detail {

using KeySet = std::set<std::string>;

inline const std::map<std::string, std::map<std::string, KeySet>>& allowed_keys() {
  static const std::map<std::string, std::map<std::string, KeySet>> table{
      {"compute",
       {{"jack", {"mu", "n", "theta"}},
        {"interp", {"mu", "n", "theta", "h"}},
        {"jacobi", {"lambda", "n", "theta", "a", "b"}},
        {"jacobi-normalized", {"lambda", "n", "theta", "a", "b"}},
        {"jacobi-value-at-1", {"lambda", "n", "theta", "a", "b"}},
        {"classical-jacobi", {"l", "a", "b"}},
        {"factorial-schur", {"mu", "n", "h"}},
        {"limit-phi", {"alpha", "beta", "gamma", "theta", "abar", "bbar", "x"}}}},
      {"verify",
       {{"interp-equivalence", {}},
        {"theta1-crosscheck", {}},
        {"orthogonality", {}},
        {"positivity", {}},
        {"branching", {}},
        {"lemma41", {"trials", "seed"}},
        {"binomial-theta1", {}},
        {"prop32", {"seed"}}}},
      {"experiment",
       {{"convergence", {"alpha", "beta", "gamma", "theta", "a", "b", "n", "grid", "long"}},
        {"c-asymptotics", {"mu", "theta", "a", "b", "a-slope", "b-slope", "n"}},
        {"growth", {"seq", "alpha", "beta", "gamma", "theta", "h", "h-slope", "n"}}}},
      {"table2", {{"1", {}}, {"2", {}}, {"3", {}}, {"4", {}}, {"5", {}}, {"6", {}}, {"7", {"parity"}}, {"8", {}}, {"9", {}}, {"10", {"parity"}}}},
  };
  return table;
}

inline const std::string& param(const CommandRequest& req, const std::string& key) {
  auto it = req.params.find(key);
  if (it == req.params.end()) throw UsageError("missing --" + key);
  return it->second;
}

inline std::optional<std::string> maybe(const CommandRequest& req, const std::string& key) {
  auto it = req.params.find(key);
  if (it == req.params.end()) return std::nullopt;
  return it->second;
}

inline Rational rational_param(const CommandRequest& req, const std::string& key, std::optional<Rational> fallback = {}) {
  auto v = maybe(req, key);
  if (!v) {
    if (fallback) return *fallback;
    throw UsageError("missing --" + key);
  }
  try {
    return parse_rational(*v);
  } catch (const Error& e) {
    throw UsageError("--" + key + ": " + e.what());
  }
}

inline int int_param(const CommandRequest& req, const std::string& key, std::optional<int> fallback = {}) {
  Rational r = rational_param(req, key, fallback ? std::optional<Rational>(Rational(*fallback)) : std::nullopt);
  if (!is_integer(r) || !r.get_num().fits_sint_p()) throw UsageError("--" + key + " must be an integer");
  return static_cast<int>(r.get_num().get_si());
}

inline int positive_int_param(const CommandRequest& req, const std::string& key, std::optional<int> fallback = {}) {
  int v = int_param(req, key, fallback);
  if (v < 1) throw UsageError("--" + key + " must be positive");
  return v;
}

inline Partition partition_param(const CommandRequest& req, const std::string& key) {
  try {
    return parse_partition(param(req, key));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError("--" + key + ": " + e.what());
  }
}

inline std::vector<Rational> rational_list(const CommandRequest& req, const std::string& key) {
  std::vector<Rational> out;
  auto v = maybe(req, key);
  if (!v || v->empty()) return out;
  std::stringstream ss(*v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw UsageError("--" + key + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<int> int_list(const CommandRequest& req, const std::string& key) {
  std::vector<int> out;
  for (const auto& r : rational_list(req, key)) {
    if (!is_integer(r) || r < 1 || !r.get_num().fits_sint_p()) throw UsageError("--" + key + " entries must be positive integers");
    out.push_back(static_cast<int>(r.get_num().get_si()));
  }
  if (out.empty()) throw UsageError("missing --" + key);
  return out;
}

inline VKParams vk_params(const CommandRequest& req) {
  try {
    return VKParams(rational_list(req, "alpha"), rational_list(req, "beta"), rational_param(req, "gamma", Rational(0)));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

inline std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

/// Payload written to stdout or --out.
struct Output {
  std::string text;
  std::vector<std::pair<std::string, std::string>> extra_files;
};

inline Output compute(const CommandRequest& req) {
  const std::string& t = req.target;
  auto as_json = [&](const Json& j) { return Output{j.dump(2) + "\n", {}}; };
  auto scalar = [&](const std::string& value, const Json& j) {
    return req.output == "json" ? Output{j.dump(2) + "\n", {}} : Output{value + "\n", {}};
  };
  if (t == "jack") return as_json(to_json(jack_polynomial(partition_param(req, "mu"), positive_int_param(req, "n"), rational_param(req, "theta"))));
  if (t == "interp")
    return as_json(to_json(interp_newton(partition_param(req, "mu"), positive_int_param(req, "n"), rational_param(req, "theta"),
                                         rational_param(req, "h"))));
  if (t == "jacobi" || t == "jacobi-normalized" || t == "jacobi-value-at-1") {
    Partition lambda = partition_param(req, "lambda");
    int n = positive_int_param(req, "n");
    ParamTriple p(rational_param(req, "theta"), rational_param(req, "a"), rational_param(req, "b"));
    if (t == "jacobi") return as_json(to_json(jacobi_monic(lambda, n, p)));
    if (t == "jacobi-normalized") return as_json(to_json(normalized_jacobi(lambda, n, p)));
    Rational v = jacobi_value_at_identity(lambda, n, p);
    return scalar(to_string(v), {{"value", to_json(v)}});
  }
  if (t == "classical-jacobi") {
    int l = int_param(req, "l");
    if (l < 0) throw UsageError("--l must be nonnegative");
    return as_json(to_json(classical_jacobi(l, rational_param(req, "a"), rational_param(req, "b"))));
  }
  if (t == "factorial-schur") {
    Partition mu = partition_param(req, "mu");
    int n = positive_int_param(req, "n");
    FactorialGrid grid = theta1_grid(n, rational_param(req, "h"), mu.part(0) + n);
    return as_json(to_json(SymPoly::from_polynomial(factorial_schur_polynomial(mu, n, grid))));
  }
  if (t == "limit-phi") {
    VKParams vk = vk_params(req);
    double x = to_double(rational_param(req, "x"));
    double v = limit_phi(vk, rational_param(req, "abar", Rational(0)), rational_param(req, "bbar", Rational(0)),
                         rational_param(req, "theta"), x);
    return scalar(decimal(v), {{"value", v}});
  }
  throw UsageError("unknown compute target " + t);
}

inline Output experiment(const CommandRequest& req) {
  const std::string& t = req.target;
  const bool json = req.output == "json";
  if (t == "convergence") {
    VKParams vk = vk_params(req);
    ParamTriple p(rational_param(req, "theta"), rational_param(req, "a"), rational_param(req, "b"));
    auto rows = convergence_experiment(vk, p, int_list(req, "n"), uniform_grid(positive_int_param(req, "grid", 17)));
    Output out;
    Json j = Json::array();
    out.text = csv_row({"n", "lambda", "sup_error", "grid_size"});
    std::string long_form = csv_row({"x", "value", "limit", "n"});
    for (const auto& r : rows) {
      out.text += csv_row({std::to_string(r.n), to_string(r.lambda), decimal(r.sup_error), std::to_string(r.grid.size())});
      Json samples = Json::array();
      for (std::size_t k = 0; k < r.grid.size(); ++k) {
        long_form += csv_row({decimal(r.grid[k]), decimal(r.values[k]), decimal(r.limits[k]), std::to_string(r.n)});
        samples.push_back({{"x", r.grid[k]}, {"value", r.values[k]}, {"limit", r.limits[k]}});
      }
      j.push_back({{"n", r.n}, {"lambda", to_json(r.lambda)}, {"sup_error", r.sup_error}, {"grid_size", r.grid.size()}, {"samples", samples}});
    }
    if (json) out.text = j.dump(2) + "\n";
    if (auto path = maybe(req, "long")) out.extra_files.emplace_back(*path, long_form);
    return out;
  }
  if (t == "c-asymptotics") {
    AffineRule a{rational_param(req, "a", Rational(0)), rational_param(req, "a-slope", Rational(0))};
    AffineRule b{rational_param(req, "b", Rational(0)), rational_param(req, "b-slope", Rational(0))};
    auto rows = c_asymptotics_check(partition_param(req, "mu"), rational_param(req, "theta"), a, b, int_list(req, "n"));
    Output out{csv_row({"n", "a_n", "b_n", "ratio", "ratio_decimal"}), {}};
    Json j = Json::array();
    for (const auto& r : rows) {
      out.text += csv_row({std::to_string(r.n), to_string(r.a_n), to_string(r.b_n), to_string(r.ratio), decimal(to_double(r.ratio))});
      j.push_back({{"n", r.n}, {"a_n", to_json(r.a_n)}, {"b_n", to_json(r.b_n)}, {"ratio", to_json(r.ratio)}});
    }
    if (json) out.text = j.dump(2) + "\n";
    return out;
  }
  if (t == "growth") {
    Rational theta = rational_param(req, "theta");
    AffineRule h{rational_param(req, "h", Rational(1)), rational_param(req, "h-slope", theta)};
    std::string kind = maybe(req, "seq").value_or("row");
    std::vector<std::pair<int, Partition>> seq;
    for (int n : int_list(req, "n")) {
      if (kind == "row")
        seq.emplace_back(n, Partition{n});
      else if (kind == "single")
        seq.emplace_back(n, Partition{1});
      else if (kind == "vk")
        seq.emplace_back(n, vk_realize(vk_params(req), n));
      else
        throw UsageError("--seq must be row, single or vk");
    }
    auto rows = growth_checks(seq, theta, h);
    Output out{csv_row({"n", "lambda", "h", "i2", "i1_squared", "inequality_holds", "size_over_n", "i1_over_n2"}), {}};
    Json j = Json::array();
    for (const auto& r : rows) {
      Rational sq = r.i1 * r.i1;
      out.text += csv_row({std::to_string(r.n), to_string(r.lambda), to_string(r.h), to_string(r.i2), to_string(sq),
                           r.inequality_holds ? "true" : "false", decimal(to_double(r.size_over_n)), decimal(to_double(r.i1_over_n2))});
      j.push_back({{"n", r.n}, {"lambda", to_json(r.lambda)}, {"h", to_json(r.h)}, {"i2", to_json(r.i2)}, {"i1_squared", to_json(sq)},
                   {"inequality_holds", r.inequality_holds}, {"size_over_n", to_json(r.size_over_n)}, {"i1_over_n2", to_json(r.i1_over_n2)}});
    }
    if (json) out.text = j.dump(2) + "\n";
    return out;
  }
  throw UsageError("unknown experiment target " + t);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string cache_key(const CommandRequest& req) {
  std::string k = req.subcommand + "\n" + req.target + "\n" + req.output + "\n";
  for (const auto& [key, v] : req.params) k += key + "=" + v + "\n";
  return k;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

}  // namespace detail

/// Parses argv into a request. Unknown options are rejected by the parser;
/// options that exist but do not apply to the target are rejected here.
inline CommandRequest parse_request(int argc, const char* const* argv) {
  CLI::App app{"Exact BC_n Jacobi, Jack and interpolation polynomials", "bcpoly"};
  app.require_subcommand(1, 1);
  CommandRequest req;
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, CLI::Option*>> options;
  std::map<std::string, std::string> output_format;
  std::map<std::string, std::string> out_path;
  std::map<std::string, CLI::Option*> out_opt;
  std::map<std::string, std::string> target;
  for (const auto& [sub, targets] : detail::allowed_keys()) {
    static const std::map<std::string, std::string> blurbs{
        {"compute", "exact polynomials and values"},
        {"verify", "run an invariant suite, one PASS/FAIL line per case"},
        {"experiment", "convergence and growth tables"},
        {"table2", "parameters of the symmetric-space series 4-10"}};
    CLI::App* s = app.add_subcommand(sub, blurbs.at(sub));
    // -h would collide with --h, the interpolation parameter
    s->set_help_flag("--help", "print this help and exit");
    s->add_option("target", target[sub], "what to " + sub)->required();
    detail::KeySet keys;
    for (const auto& [t, ks] : targets) keys.insert(ks.begin(), ks.end());
    for (const auto& k : keys) options[sub][k] = s->add_option("--" + k, values[sub][k]);
    output_format[sub] = sub == "experiment" ? "csv" : "text";
    s->add_option("--output", output_format[sub], "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    out_opt[sub] = s->add_option("--out", out_path[sub], "write the result to this file");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n" + app.help());
  }
  for (const auto& [sub, targets] : detail::allowed_keys()) {
    if (!app.got_subcommand(sub)) continue;
    req.subcommand = sub;
    req.target = target[sub];
    auto it = targets.find(req.target);
    if (it == targets.end()) {
      std::string names;
      for (const auto& [t, ks] : targets) names += (names.empty() ? "" : ", ") + t;
      throw UsageError("unknown " + sub + " target '" + req.target + "' (expected one of " + names + ")");
    }
    for (const auto& [k, opt] : options[sub]) {
      if (!opt->count()) continue;
      if (!it->second.count(k)) throw UsageError("option --" + k + " does not apply to " + sub + " " + req.target);
      req.params[k] = values[sub][k];
    }
    req.output = output_format[sub];
    if (out_opt[sub]->count()) req.out_path = out_path[sub];
  }
  if (req.subcommand == "verify" && req.params.count("trials") && !req.params.count("seed"))
    throw UsageError("--trials requires --seed");
  return req;
}

/// Runs a request, writing results to `out` (or --out) and diagnostics to `err`.
/// Returns the process exit code: 0 iff the report is ok.
inline int execute(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  RunReport report;
  detail::Output result;
  const char* cache_dir = std::getenv("BCPOLY_CACHE_DIR");
  const bool cacheable = req.subcommand != "verify" && !req.params.count("long") && cache_dir && *cache_dir;
  std::filesystem::path cache_file;
  if (cacheable) {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.out", static_cast<unsigned long long>(detail::fnv1a(detail::cache_key(req))));
    cache_file = std::filesystem::path(cache_dir) / name;
  }
  if (cacheable && std::filesystem::exists(cache_file)) {
    std::ifstream f(cache_file, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    result.text = ss.str();
  } else if (req.subcommand == "compute") {
    result = detail::compute(req);
  } else if (req.subcommand == "experiment") {
    result = detail::experiment(req);
  } else if (req.subcommand == "table2") {
    auto parity = detail::maybe(req, "parity");
    SeriesEntry e = table2_params(std::stoi(req.target), parity);
    if (req.output == "csv") {
      result.text = detail::csv_row({"series_id", "group_pair", "theta", "a", "b", "root_system", "parity", "caveat"}) +
                    detail::csv_row({std::to_string(e.series_id), e.group_pair, to_string(e.theta), to_string(e.a), to_string(e.b),
                                     e.root_system, e.parity.value_or(""), e.caveat.value_or("")});
    } else {
      result.text = to_json(e).dump(2) + "\n";
    }
  } else {
    VerifyOptions opt;
    opt.trials = detail::positive_int_param(req, "trials", 200);
    Rational seed = detail::rational_param(req, "seed", Rational(7));
    if (!is_integer(seed) || seed < 0 || !seed.get_num().fits_ulong_p()) throw UsageError("--seed must be a nonnegative integer");
    opt.seed = static_cast<std::uint32_t>(seed.get_num().get_ui());
    report.checks = run_verify(req.target, opt);
    for (const auto& c : report.checks) report.ok = report.ok && c.passed;
    if (req.output == "json") {
      Json checks = Json::array();
      for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
      result.text = Json{{"status", report.ok ? "ok" : "fail"}, {"target", req.target}, {"checks", checks}}.dump(2) + "\n";
    } else {
      for (const auto& c : report.checks)
        result.text += (c.passed ? "PASS " : "FAIL ") + c.name + (c.passed ? "" : ": " + c.detail) + "\n";
      std::size_t passed = 0;
      for (const auto& c : report.checks) passed += c.passed;
      result.text += std::string(report.ok ? "ok" : "fail") + ": " + std::to_string(passed) + "/" +
                     std::to_string(report.checks.size()) + " cases passed\n";
    }
  }
  if (cacheable && !std::filesystem::exists(cache_file)) {
    std::filesystem::create_directories(cache_dir);
    detail::write_file(cache_file.string(), result.text);
  }
  if (req.out_path) {
    detail::write_file(*req.out_path, result.text);
    report.artifacts.push_back(*req.out_path);
  } else {
    out << result.text;
  }
  for (const auto& [path, text] : result.extra_files) {
    detail::write_file(path, text);
    report.artifacts.push_back(path);
  }
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& a : report.artifacts) err << "wrote " << a << "\n";
  if (!report.ok) err << "verify " << req.target << ": failing cases present\n";
  return report.ok ? 0 : 1;
}

/// Full command-line entry point.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_request(argc, argv), out, err);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const std::exception& e) {
    err << "bcpoly: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bcpoly::cli
