#pragma once

// Command-line front end. Every command is a Job: a command name, a JSON
// parameter object and an output format. Flags and --job files both build
// Jobs, so both paths validate and print identically.
//
// Exit codes: 0 success, 1 usage, 2 validation / on-wall / series cap,
// 3 internal-consistency failure.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3dw/json_io.hpp"
#include "k3dw/k3dw.hpp"
#include "k3dw/sampling.hpp"

namespace k3dw::app {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kConsistency = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string command;
  json params = json::object();
  std::string format;  // empty: the command's default
};

inline json load_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::invalid_argument, std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline void allow_params(const Job& job, std::initializer_list<std::string_view> required,
                         std::initializer_list<std::string_view> optional = {}) {
  for (auto it = job.params.begin(); it != job.params.end(); ++it) {
    bool known = false;
    for (auto n : required) known = known || it.key() == n;
    for (auto n : optional) known = known || it.key() == n;
    if (!known) throw UsageError("unknown field '" + it.key() + "' for command '" + job.command + "'");
  }
  for (auto n : required)
    if (!job.params.contains(std::string(n)))
      throw UsageError("command '" + job.command + "' requires '" + std::string(n) + "'");
}

inline std::string format_of(const Job& job, const std::string& fallback, std::initializer_list<std::string_view> allowed) {
  const std::string f = job.format.empty() ? fallback : job.format;
  for (auto a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not supported by '" + job.command + "'");
}

inline void print_value(std::ostream& out, const Job& job, const std::string& value, json extra = json::object()) {
  if (format_of(job, "text", {"text", "json"}) == "text") {
    out << value << "\n";
    return;
  }
  extra["schema"] = json_io::kSchema;
  extra["command"] = job.command;
  extra["value"] = value;
  out << extra.dump(2) << "\n";
}

inline bool flag(const json& params, const char* name) {
  if (!params.contains(name)) return false;
  if (!params[name].is_boolean()) throw Error(ErrorCode::invalid_argument, std::string(name) + " must be a boolean");
  return params[name].get<bool>();
}

inline KahlerVector kahler_param(const json& params, const char* name, const BoundaryClass& boundary) {
  KahlerOptions options;
  options.require_positive_on_boundary = !flag(params, "allow_nonpositive_L");
  if (params.contains("period")) options.period = json_io::period_from(params["period"]);
  return KahlerVector(json_io::kahler_coords_from(params[name]), boundary, options);
}

inline long long integer_param(const json& params, const char* name, long long fallback) {
  if (!params.contains(name)) return fallback;
  if (!params[name].is_number_integer()) throw UsageError(std::string(name) + " must be an integer");
  return params[name].get<long long>();
}

inline json chamber_metadata() { return {{"convention", kChamberConvention}}; }

}  // namespace detail

// ---------------------------------------------------------------- commands

inline int cmd_yz(const Job& job, std::ostream& out) {
  detail::allow_params(job, {"max"});
  const long long n = detail::integer_param(job.params, "max", -1);
  if (n < 0) throw UsageError("--max must be a nonnegative integer");
  const auto coefficients = yz_coefficients(static_cast<std::size_t>(n));
  if (detail::format_of(job, "csv", {"csv", "json"}) == "csv") {
    for (std::size_t d = 0; d < coefficients.size(); ++d) out << d << "," << coefficients[d].get_str() << "\n";
  } else {
    out << "[";
    for (std::size_t d = 0; d < coefficients.size(); ++d) out << (d ? ", " : "") << coefficients[d].get_str();
    out << "]\n";
  }
  return kOk;
}

inline int cmd_closed(const Job& job, std::ostream& out) {
  if (job.params.contains("beta")) {
    detail::allow_params(job, {"beta"});
    const LatticeVector beta = json_io::lattice_vector_from(job.params["beta"]);
    detail::print_value(out, job, json_io::to_string(reduced_gw(beta)),
                        {{"square", json_io::to_json(square(beta))}, {"content", json_io::to_json(content(beta))}});
  } else {
    detail::allow_params(job, {"square", "content"});
    const mpz_class sq = json_io::integer_from(job.params["square"]);
    const mpz_class c = json_io::integer_from(job.params["content"]);
    detail::print_value(out, job, json_io::to_string(reduced_gw(sq, c)));
  }
  return kOk;
}

inline int cmd_walls(const Job& job, std::ostream& out) {
  detail::allow_params(job, {"gamma"});
  const RelativeClass gamma = json_io::relative_class_from(job.params["gamma"]);
  const auto walls = valid_hyperplanes(gamma);
  if (detail::format_of(job, "json", {"json", "text"}) == "text") {
    for (const auto& w : walls)
      out << w.k.get_str() << " " << w.pairing_with_l.get_str() << " " << w.closed_invariant.get_str() << "\n";
    return kOk;
  }
  json records = json::array();
  for (const auto& w : walls) records.push_back(json_io::to_json(w));
  out << json{{"schema", json_io::kSchema},
              {"command", "walls"},
              {"relative_divisibility", json_io::to_json(relative_divisibility(gamma))},
              {"walls", records}}
             .dump(2)
      << "\n";
  return kOk;
}

inline int cmd_open(const Job& job, std::ostream& out) {
  detail::allow_params(job, {"gamma", "kappa"}, {"allow_nonpositive_L", "period"});
  const RelativeClass gamma = json_io::relative_class_from(job.params["gamma"]);
  const KahlerVector kappa = detail::kahler_param(job.params, "kappa", gamma.boundary());
  detail::print_value(out, job, json_io::to_string(open_invariant(gamma, kappa)), detail::chamber_metadata());
  return kOk;
}

inline int cmd_cross(const Job& job, std::ostream& out) {
  detail::allow_params(job, {"gamma", "from", "to"}, {"allow_nonpositive_L", "period"});
  const RelativeClass gamma = json_io::relative_class_from(job.params["gamma"]);
  const KahlerVector from = detail::kahler_param(job.params, "from", gamma.boundary());
  const KahlerVector to = detail::kahler_param(job.params, "to", gamma.boundary());
  detail::print_value(out, job, json_io::to_string(crossing_delta(gamma, from, to)), detail::chamber_metadata());
  return kOk;
}

inline int cmd_bps(const Job& job, std::ostream& out) {
  detail::allow_params(job, {"gamma", "kappa"}, {"allow_nonpositive_L", "period"});
  const RelativeClass gamma = json_io::relative_class_from(job.params["gamma"]);
  const KahlerVector kappa = detail::kahler_param(job.params, "kappa", gamma.boundary());
  const mpz_class value = bps_invariant(gamma, kappa);
  json extra = detail::chamber_metadata();
  extra["open_invariant"] = json_io::to_json(open_invariant(gamma, kappa));
  detail::print_value(out, job, value.get_str(), extra);
  return kOk;
}

inline int cmd_rotate(const Job& job, std::ostream& out) {
  detail::allow_params(job, {"omega", "period", "angle"});
  const RationalVector omega = json_io::rational_vector_from(job.params["omega"]);
  const PeriodPoint s = json_io::period_from(job.params["period"]);
  const UnitAngle theta = json_io::angle_from(job.params["angle"]);
  const RotatedStructure r = rotate(omega, s, theta);
  detail::format_of(job, "json", {"json"});
  out << json{{"schema", json_io::kSchema},
              {"command", "rotate"},
              {"angle", json_io::to_json(theta)},
              {"omega_theta", json_io::to_json(r.omega)},
              {"Omega_theta", json_io::to_json(r.holomorphic)}}
             .dump(2)
      << "\n";
  return kOk;
}

inline int cmd_charge(const Job& job, std::ostream& out) {
  detail::allow_params(job, {"gamma", "period"});
  const RelativeClass gamma = json_io::relative_class_from(job.params["gamma"]);
  const PeriodPoint s = json_io::period_from(job.params["period"]);
  const GaussianRational z = central_charge(s, gamma);
  json result{{"schema", json_io::kSchema}, {"command", "charge"}, {"central_charge", json_io::to_json(z)}};
  result["disc_angle_direction"] = z.is_zero() ? json(nullptr) : json_io::to_json(disc_angle_direction(s, gamma));
  detail::format_of(job, "json", {"json"});
  out << result.dump(2) << "\n";
  return kOk;
}

inline int cmd_strongly_primitive(const Job& job, std::ostream& out) {
  detail::allow_params(job, {"gamma", "period"}, {"allow_zero_remainder"});
  const RelativeClass gamma = json_io::relative_class_from(job.params["gamma"]);
  const PeriodPoint s = json_io::period_from(job.params["period"]);
  const Strictness strictness =
      detail::flag(job.params, "allow_zero_remainder") ? Strictness::allow_zero_remainder : Strictness::literal;
  detail::print_value(out, job, strongly_primitive(gamma, s, strictness) ? "true" : "false");
  return kOk;
}

// ------------------------------------------------------------ check suites

struct SuiteOptions {
  long trials = 100;
  std::uint64_t seed = 1;
  long max_divisibility = 6;
};

class SuiteReport {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  json to_json(const std::string& suite, const SuiteOptions& o) const {
    return {{"schema", json_io::kSchema}, {"command", "check"},  {"suite", suite},
            {"seed", o.seed},             {"trials", o.trials},  {"max_divisibility", o.max_divisibility},
            {"checked", checked_},        {"failed", failed_},   {"failures", failures_},
            {"passed", passed()}};
  }

 private:
  long checked_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
};

namespace suites {

inline std::pair<RelativeClass, KahlerVector> chamber_instance(Sampler& sampler, long max_divisibility) {
  for (;;) {
    const BoundaryClass b = sampler.boundary();
    RelativeClass g = sampler.relative_class(b, sampler.uniform(1, max_divisibility));
    KahlerVector kappa = sampler.kahler(g);
    if (walls_containing(valid_hyperplanes(g), kappa).empty()) return {std::move(g), std::move(kappa)};
  }
}

inline void lattice(const SuiteOptions& o, SuiteReport& r) {
  Sampler sampler(o.seed);
  r.expect(abs(determinant(gram_matrix())) == 1, "|det Gram| != 1");
  RationalMatrix g(kLatticeRank, kLatticeRank);
  const IntMatrix gi = gram_matrix();
  for (std::size_t i = 0; i < kLatticeRank; ++i)
    for (std::size_t j = 0; j < kLatticeRank; ++j) g(i, j) = gi(i, j);
  const Signature sig = signature(g);
  r.expect(sig.positive == 3 && sig.negative == 19, "signature is not (3,19)");
  for (long t = 0; t < o.trials; ++t) {
    const LatticeVector u = sampler.vector(), v = sampler.vector(), root = sampler.root();
    r.expect(square(u) % 2 == 0, "odd square");
    r.expect(pair(reflect(u, root), reflect(v, root)) == pair(u, v), "reflection does not preserve the pairing");
    r.expect(content(reflect(u, root)) == content(u), "reflection changes content");
  }
}

inline void series_oracle(const SuiteOptions& o, SuiteReport& r) {
  const std::size_t order = static_cast<std::size_t>(std::max(30L, std::min(o.trials, 200L)));
  std::vector<mpz_class> partitions(order + 1, 0), power(order + 1, 0);
  partitions[0] = power[0] = 1;
  for (std::size_t part = 1; part <= order; ++part)
    for (std::size_t n = part; n <= order; ++n) partitions[n] += partitions[n - part];
  for (int copy = 0; copy < 24; ++copy) {
    std::vector<mpz_class> next(order + 1, 0);
    for (std::size_t i = 0; i <= order; ++i)
      for (std::size_t j = 0; i + j <= order; ++j) next[i + j] += power[i] * partitions[j];
    power = std::move(next);
  }
  const auto g = yz_coefficients(order);
  for (std::size_t d = 0; d <= order; ++d) r.expect(g[d] == power[d], "G_" + std::to_string(d) + " differs from product");
}

inline void closed(const SuiteOptions& o, SuiteReport& r) {
  Sampler sampler(o.seed);
  for (long t = 0; t < o.trials; ++t) {
    const LatticeVector p = sampler.vector_with_content(1, 3);
    r.expect(reduced_gw(p) == mpq_class(yz_coefficient(square(p) / 2 + 1)), "primitive law");
    const LatticeVector two = sampler.vector_with_content(2, 3);
    r.expect(reduced_gw(two) == two_divisible_check(two), "two-divisible remark");
    r.expect(reduced_gw(-two) == reduced_gw(two), "negation");
  }
}

inline void liftings(const SuiteOptions& o, SuiteReport& r) {
  Sampler sampler(o.seed);
  for (long t = 0; t < o.trials; ++t) {
    const BoundaryClass b = sampler.boundary();
    const RelativeClass g = sampler.relative_class(b, sampler.uniform(1, o.max_divisibility));
    const auto fast = valid_liftings(g);
    std::vector<mpz_class> scanned;
    for (long k = -200; k <= 200; ++k) {
      const LatticeVector v = g.lifting(k);
      if (!v.is_zero() && reduced_gw(v) != 0) scanned.push_back(k);
    }
    bool same = fast.size() == scanned.size();
    for (std::size_t i = 0; same && i < fast.size(); ++i) same = fast[i].k == scanned[i];
    r.expect(same, "lifting interval disagrees with scan at trial " + std::to_string(t));
  }
}

inline void reality(const SuiteOptions& o, SuiteReport& r) {
  Sampler sampler(o.seed);
  for (long t = 0; t < o.trials; ++t) {
    const auto [g, kappa] = chamber_instance(sampler, o.max_divisibility);
    r.expect(open_invariant(-g, kappa) == open_invariant(g, kappa), "reality at trial " + std::to_string(t));
  }
}

inline void integrality(const SuiteOptions& o, SuiteReport& r) {
  Sampler sampler(o.seed);
  for (long t = 0; t < o.trials; ++t) {
    const auto [g, kappa] = chamber_instance(sampler, o.max_divisibility);
    mpq_class rebuilt = 0;
    for (const auto& d : divisors(relative_divisibility(g))) {
      const BpsEvaluation e = evaluate_bps(divide(g, d), kappa);
      r.expect(e.by_mobius == e.by_walls, "BPS methods disagree at trial " + std::to_string(t));
      r.expect(e.by_mobius.get_den() == 1, "non-integral BPS value at trial " + std::to_string(t));
      mpq_class term(e.value, d * d);
      term.canonicalize();
      rebuilt += term;
    }
    r.expect(rebuilt == open_invariant(g, kappa), "multiple cover reconstruction at trial " + std::to_string(t));
  }
}

inline void path_independence(const SuiteOptions& o, SuiteReport& r) {
  Sampler sampler(o.seed);
  for (long t = 0; t < o.trials; ++t) {
    const auto [g, k0] = chamber_instance(sampler, o.max_divisibility);
    std::vector<KahlerVector> path{k0};
    while (path.size() < 4) {
      KahlerVector k = sampler.kahler(g);
      if (walls_containing(valid_hyperplanes(g), k).empty()) path.push_back(std::move(k));
    }
    mpq_class total = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const mpq_class step = crossing_delta(g, path[i], path[i + 1]);
      r.expect(step == open_invariant(g, path[i + 1]) - open_invariant(g, path[i]),
               "delta differs from open difference at trial " + std::to_string(t));
      total += step;
    }
    r.expect(total == crossing_delta(g, path.front(), path.back()), "path does not telescope at trial " + std::to_string(t));
  }
}

inline void rotation(const SuiteOptions& o, SuiteReport& r) {
  Sampler sampler(o.seed);
  for (long t = 0; t < o.trials; ++t) {
    const HyperkahlerTriple triple = sampler.hyperkahler_triple();
    const UnitAngle theta = sampler.angle();
    const RotatedStructure rot = rotate(triple.omega, triple.period, theta);
    r.expect(square(rot.omega) == square(triple.omega), "rotation changes omega^2");
    r.expect(pair(rot.holomorphic, rot.holomorphic).is_zero(), "rotated Omega^2 != 0");
    r.expect(twistor_form(triple.omega, triple.period, theta.as_complex()) == rot.holomorphic,
             "twistor form differs from rotation");
  }
}

}  // namespace suites

inline const std::map<std::string, std::function<void(const SuiteOptions&, SuiteReport&)>>& suite_table() {
  static const std::map<std::string, std::function<void(const SuiteOptions&, SuiteReport&)>> table{
      {"lattice", suites::lattice},
      {"series-oracle", suites::series_oracle},
      {"closed", suites::closed},
      {"liftings", suites::liftings},
      {"reality", suites::reality},
      {"integrality", suites::integrality},
      {"path-independence", suites::path_independence},
      {"rotation", suites::rotation},
  };
  return table;
}

inline int cmd_check(const Job& job, std::ostream& out) {
  detail::allow_params(job, {"suite"}, {"trials", "seed", "max_divisibility"});
  if (!job.params["suite"].is_string()) throw UsageError("suite must be a string");
  const std::string name = job.params["suite"].get<std::string>();
  const auto it = suite_table().find(name);
  if (it == suite_table().end()) throw UsageError("unknown suite '" + name + "'");
  SuiteOptions options;
  options.trials = detail::integer_param(job.params, "trials", options.trials);
  options.seed = static_cast<std::uint64_t>(detail::integer_param(job.params, "seed", 1));
  options.max_divisibility = detail::integer_param(job.params, "max_divisibility", options.max_divisibility);
  if (options.trials < 0 || options.max_divisibility < 1) throw UsageError("trials >= 0 and max-divisibility >= 1 required");
  SuiteReport report;
  it->second(options, report);
  detail::format_of(job, "json", {"json"});
  out << report.to_json(name, options).dump(2) << "\n";
  return report.passed() ? kOk : kConsistency;
}

// --------------------------------------------------------------- dispatch

inline int execute(const Job& job, std::ostream& out) {
  static const std::map<std::string, std::function<int(const Job&, std::ostream&)>> commands{
      {"yz", cmd_yz},         {"closed", cmd_closed}, {"walls", cmd_walls},   {"open", cmd_open},
      {"cross", cmd_cross},   {"bps", cmd_bps},       {"rotate", cmd_rotate}, {"charge", cmd_charge},
      {"check", cmd_check},   {"strongly-primitive", cmd_strongly_primitive},
  };
  const auto it = commands.find(job.command);
  if (it == commands.end()) throw UsageError("unknown command '" + job.command + "'");
  return it->second(job, out);
}

/// Parses a versioned JobSpec object.
inline Job job_from_spec(const json& spec) {
  if (!spec.is_object()) throw UsageError("job spec must be a JSON object");
  if (!spec.contains("schema") || spec["schema"] != json_io::kSchema) throw UsageError("job spec requires schema \"k3dw/1\"");
  if (!spec.contains("command") || !spec["command"].is_string()) throw UsageError("job spec requires a command");
  Job job;
  job.command = spec["command"].get<std::string>();
  for (auto it = spec.begin(); it != spec.end(); ++it) {
    if (it.key() == "schema" || it.key() == "command" || it.key() == "series_cap") continue;
    if (it.key() == "format") {
      job.format = it.value().get<std::string>();
      continue;
    }
    job.params[it.key()] = it.value();
  }
  return job;
}

/// Approximates e^{i theta} by an exact rational point on the unit circle
/// whose half-angle tangent has denominator at most `max_denominator`.
inline UnitAngle approximate_angle(double theta, long max_denominator) {
  auto rationalize = [max_denominator](double x) {
    // Continued-fraction convergents.
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rest = x;
    for (int step = 0; step < 64; ++step) {
      const double a = std::floor(rest);
      const long long ai = static_cast<long long>(a);
      const long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
      if (q2 > max_denominator) break;
      p0 = p1, q0 = q1, p1 = p2, q1 = q2;
      if (rest - a < 1e-15) break;
      rest = 1.0 / (rest - a);
    }
    mpq_class out(mpz_class(std::to_string(p1)), mpz_class(std::to_string(q1)));
    out.canonicalize();
    return out;
  };
  const double half = theta / 2;
  if (std::abs(std::cos(half)) >= std::abs(std::sin(half))) return UnitAngle::from_half_angle_tangent(rationalize(std::tan(half)));
  const mpq_class cot = rationalize(std::cos(half) / std::sin(half));
  if (cot == 0) return UnitAngle(-1, 0);
  return UnitAngle::from_half_angle_tangent(1 / cot);
}

inline void apply_series_cap(std::optional<long long> cap) {
  if (!cap) {
    if (const char* env = std::getenv("K3DW_SERIES_CAP")) {
      try {
        cap = std::stoll(env);
      } catch (const std::exception&) {
        throw UsageError("K3DW_SERIES_CAP must be an integer");
      }
    }
  }
  if (!cap) return;
  if (*cap < 0) throw UsageError("series cap must be nonnegative");
  series_cache().set_cap(static_cast<std::size_t>(*cap));
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reduced open Gromov-Witten invariants of K3 surfaces with a rigid boundary curve", "k3dw"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  std::optional<long long> cap;
  app.add_option("--format", format, "Output format: text, json or csv (command dependent)");
  app.add_option("--cap", cap, "Largest Yau-Zaslow index that may be computed (default 100000, env K3DW_SERIES_CAP)");

  Job job;
  std::map<std::string, std::string> json_args;  // param name -> file or inline JSON
  std::vector<std::function<void()>> finishers;

  auto json_option = [&](CLI::App* sub, const std::string& flag, const std::string& param, const std::string& help) {
    return sub->add_option(flag, json_args[param], help);
  };

  long long max_order = -1;
  auto* yz = app.add_subcommand("yz", "Yau-Zaslow coefficients G_0..G_N");
  yz->add_option("--max", max_order, "Largest index N")->required();
  finishers.push_back([&] {
    if (yz->parsed()) job.params["max"] = max_order;
  });

  std::string beta_file, beta_inline, square_arg, content_arg;
  auto* closed = app.add_subcommand("closed", "Reduced genus-zero invariant of a curve class");
  closed->add_option("--beta-file", beta_file, "JSON file with 22 integers");
  closed->add_option("--beta", beta_inline, "Inline JSON array of 22 integers");
  closed->add_option("--square", square_arg, "beta^2 (with --content)");
  closed->add_option("--content", content_arg, "Divisibility of beta (with --square)");
  finishers.push_back([&] {
    if (!closed->parsed()) return;
    const int given = !beta_file.empty() + !beta_inline.empty() + (!square_arg.empty() || !content_arg.empty());
    if (given != 1) throw UsageError("closed needs exactly one of --beta-file, --beta, or --square/--content");
    if (!beta_file.empty()) job.params["beta"] = load_json(beta_file);
    if (!beta_inline.empty()) job.params["beta"] = load_json(beta_inline);
    if (!square_arg.empty() || !content_arg.empty()) {
      if (square_arg.empty() || content_arg.empty()) throw UsageError("--square and --content go together");
      job.params["square"] = square_arg;
      job.params["content"] = content_arg;
    }
  });

  bool allow_nonpositive = false;
  auto add_kahler_flags = [&](CLI::App* sub) {
    sub->add_flag("--allow-nonpositive-L", allow_nonpositive, "Skip the <kappa, L> > 0 requirement");
    json_option(sub, "--period", "period", "Period point; kappa must then be of type (1,1)");
  };

  auto* walls = app.add_subcommand("walls", "Valid hyperplanes of a relative class");
  json_option(walls, "--gamma", "gamma", "Relative class (file or inline JSON)")->required();

  auto* open = app.add_subcommand("open", "Reduced open invariant in the chamber of kappa");
  json_option(open, "--gamma", "gamma", "Relative class")->required();
  json_option(open, "--kappa", "kappa", "Kähler class")->required();
  add_kahler_flags(open);

  auto* cross = app.add_subcommand("cross", "Wall-crossing change between two Kähler classes");
  json_option(cross, "--gamma", "gamma", "Relative class")->required();
  json_option(cross, "--from", "from", "Start Kähler class")->required();
  json_option(cross, "--to", "to", "End Kähler class")->required();
  add_kahler_flags(cross);

  auto* bps = app.add_subcommand("bps", "BPS integer of a relative class");
  json_option(bps, "--gamma", "gamma", "Relative class")->required();
  json_option(bps, "--kappa", "kappa", "Kähler class")->required();
  add_kahler_flags(bps);

  double theta = 0;
  long max_denominator = 1000000;
  auto* rot = app.add_subcommand("rotate", "HyperKähler rotation of (omega, Omega)");
  json_option(rot, "--omega", "omega", "Kähler form, 22 rationals")->required();
  json_option(rot, "--period", "period", "Period point")->required();
  auto* angle_opt = json_option(rot, "--angle", "angle", "Exact unit angle {\"c\":..,\"s\":..}");
  auto* theta_opt = rot->add_option("--theta", theta, "Angle in radians, approximated by a rational circle point");
  rot->add_option("--max-denominator", max_denominator, "Denominator bound on tan(theta/2) for --theta");
  angle_opt->excludes(theta_opt);
  finishers.push_back([&] {
    if (!rot->parsed()) return;
    if (theta_opt->count() > 0) {
      job.params["angle"] = json_io::to_json(approximate_angle(theta, max_denominator));
    } else if (angle_opt->count() == 0) {
      throw UsageError("rotate needs --angle or --theta");
    }
  });

  auto* charge = app.add_subcommand("charge", "Central charge and disc angle of a relative class");
  json_option(charge, "--gamma", "gamma", "Relative class")->required();
  json_option(charge, "--period", "period", "Period point")->required();

  bool allow_zero_remainder = false;
  auto* sp = app.add_subcommand("strongly-primitive", "Strong primitivity at a period point");
  json_option(sp, "--gamma", "gamma", "Relative class")->required();
  json_option(sp, "--period", "period", "Period point")->required();
  sp->add_flag("--allow-zero-remainder", allow_zero_remainder, "Also reject classes that are k-divisible outright");

  std::string suite;
  long long trials = 100, seed = 1, max_div = 6;
  auto* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("--suite", suite, "lattice, series-oracle, closed, liftings, reality, integrality, path-independence, rotation")
      ->required();
  check->add_option("--trials", trials, "Number of random trials");
  check->add_option("--seed", seed, "Generator seed");
  check->add_option("--max-divisibility", max_div, "Largest relative divisibility drawn");
  finishers.push_back([&] {
    if (!check->parsed()) return;
    job.params["suite"] = suite;
    job.params["trials"] = trials;
    job.params["seed"] = seed;
    job.params["max_divisibility"] = max_div;
  });

  std::string job_arg;
  auto* run_job = app.add_subcommand("run", "Execute a JobSpec (file or inline JSON, schema k3dw/1)");
  run_job->add_option("--job", job_arg, "JobSpec")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (run_job->parsed()) {
      const json spec = load_json(job_arg);
      if (spec.contains("series_cap")) cap = detail::integer_param(spec, "series_cap", 0);
      job = job_from_spec(spec);
      if (!format.empty()) job.format = format;
    } else {
      job.command = app.get_subcommands().front()->get_name();
      job.format = format;
      for (const auto& [param, arg] : json_args) {
        if (arg.empty()) continue;
        job.params[param] = load_json(arg);
      }
      if (allow_nonpositive) job.params["allow_nonpositive_L"] = true;
      if (allow_zero_remainder) job.params["allow_zero_remainder"] = true;
      for (auto& f : finishers) f();
    }
    apply_series_cap(cap);
    return execute(job, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::consistency_failure ? kConsistency : kValidation;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace k3dw::app
