#pragma once

// Command-line front end. run() turns a JobSpec into an exit code plus the
// text written to stdout/stderr; main_entry() parses argv into a JobSpec.
//
// Exit codes: 0 ok, 1 input error, 2 budget exceeded (partial output is still
// printed), 3 verification failure, 4 internal invariant violation.

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clustercox/catalog.hpp"
#include "clustercox/coxeter.hpp"
#include "clustercox/exchange_graph.hpp"
#include "clustercox/io.hpp"
#include "clustercox/roots.hpp"
#include "clustercox/seed.hpp"
#include "clustercox/verify.hpp"

namespace clustercox::cli {

using json = io::json;

enum ExitCode : int { kOk = 0, kInputError = 1, kBudgetExceeded = 2, kVerifyFailed = 3, kInternalError = 4 };

struct Budgets {
  std::size_t max_depth = 64;
  std::size_t max_vars = 100000;
  std::size_t max_terms = 20000000;
  std::optional<long> max_power;  // default: product of 2n_c + 2 over components
};

/// An irreducible finite type of rank n has order at most 2n + 2, so the
/// product over components bounds the lcm for every finite type.
inline long power_bound(const Budgets& b, const CartanMatrix& a) {
  if (b.max_power) return *b.max_power;
  long bound = 1;
  for (const auto& comp : connected_components(a.matrix())) bound *= 2 * static_cast<long>(comp.size()) + 2;
  return bound;
}

/// CLUSTERCOX_MAX_DEPTH, CLUSTERCOX_MAX_VARS, CLUSTERCOX_MAX_TERMS and
/// CLUSTERCOX_MAX_POWER replace the corresponding defaults.
inline Budgets budgets_from_env(Budgets b = {}) {
  auto read = [](const char* name, auto& field) {
    const char* v = std::getenv(name);
    if (!v || !*v) return;
    try {
      std::size_t used = 0;
      const long long x = std::stoll(v, &used);
      detail::require(used == std::string(v).size() && x > 0, "");
      field = static_cast<std::remove_cvref_t<decltype(*&field)>>(x);
    } catch (const std::exception&) {
      throw StructuralError(std::string(name) + " must be a positive integer, got '" + v + "'");
    }
  };
  read("CLUSTERCOX_MAX_DEPTH", b.max_depth);
  read("CLUSTERCOX_MAX_VARS", b.max_vars);
  read("CLUSTERCOX_MAX_TERMS", b.max_terms);
  long power = 0;
  read("CLUSTERCOX_MAX_POWER", power);
  if (power > 0) b.max_power = power;
  return b;
}

struct JobSpec {
  std::string command;  // classify, mutate, enumerate, orbit, order, verify, examples
  std::optional<std::string> matrix;      // exchange matrix JSON
  std::optional<std::string> cartan;      // Cartan matrix JSON
  std::optional<std::string> type;        // builtin name
  std::optional<std::string> input_file;  // JSON file
  std::optional<std::string> orientation;
  std::vector<long> k;  // 1-based mutation directions
  long mmin = 0;
  long mmax = 5;
  Budgets budgets{};
  bool text = false;
  std::string suite = "all";
  std::size_t max_rank = 3;
  unsigned threads = 1;
};

struct RunResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// ---------------------------------------------------------------------------

namespace detail {

using clustercox::detail::require;

struct Resolved {
  CartanMatrix cartan;
  ExchangeMatrix exchange;
  std::optional<ValuedQuiver> quiver;  // empty when B has an oriented cycle
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot read input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Resolved from_quiver(ValuedQuiver q) {
  ExchangeMatrix b = matrix_of_orientation(q);
  return Resolved{q.cartan(), std::move(b), std::move(q)};
}

inline Resolved from_exchange(ExchangeMatrix b) {
  CartanMatrix a = cartan_counterpart(b);
  std::optional<ValuedQuiver> q;
  if (!has_positive_cycle(b)) q = quiver_of_pair(b);
  return Resolved{std::move(a), std::move(b), std::move(q)};
}

inline ValuedQuiver orient(const CartanMatrix& a, const std::optional<json>& member,
                           const std::optional<std::string>& flag) {
  if (flag) return io::parse_orientation(a, *flag);
  if (!member) return default_orientation(a);
  if (member->is_string()) return io::parse_orientation(a, member->get<std::string>());
  return io::orientation_from_json(a, *member);
}

inline Resolved resolve(const JobSpec& job) {
  const int sources = job.matrix.has_value() + job.cartan.has_value() + job.type.has_value() +
                      job.input_file.has_value();
  require(sources == 1, "give exactly one of --matrix, --cartan, --type, --input");
  if (job.type) return from_quiver(orient(builtin_cartan(*job.type), std::nullopt, job.orientation));

  io::MatrixInput in;
  if (job.matrix) {
    in = io::matrix_input(io::parse_json(*job.matrix), io::MatrixInput::Kind::exchange);
  } else if (job.cartan) {
    in = io::matrix_input(io::parse_json(*job.cartan), io::MatrixInput::Kind::cartan);
  } else {
    in = io::matrix_input(io::parse_json(read_file(*job.input_file)), io::MatrixInput::Kind::exchange);
  }
  if (in.m.size() == 0) {  // {"type": ...}
    return from_quiver(orient(builtin_cartan(*in.type), in.orientation, job.orientation));
  }
  if (in.kind == io::MatrixInput::Kind::cartan) {
    return from_quiver(orient(CartanMatrix(in.m), in.orientation, job.orientation));
  }
  require(!job.orientation && !in.orientation, "an exchange matrix already fixes the orientation");
  return from_exchange(ExchangeMatrix(in.m));
}

inline const ValuedQuiver& acyclic_quiver(const Resolved& r) {
  require(r.quiver.has_value(), "exchange matrix has an oriented cycle; no Coxeter automorphism");
  return *r.quiver;
}

inline std::string dump(const json& j) { return j.dump() + "\n"; }

inline std::string both_forms(const LaurentPoly& f) {
  const std::string frac = fraction_string(f), canon = canonical_string(f);
  return frac == canon ? frac : frac + "    [" + canon + "]";
}

inline std::string matrix_text(const SquareMatrix& m) {
  std::string out;
  for (const auto& row : m.rows()) {
    out += " ";
    for (auto v : row) {
      std::string s = std::to_string(v);
      out += std::string(s.size() < 3 ? 3 - s.size() : 0, ' ') + " " + s;
    }
    out += "\n";
  }
  return out;
}

inline ExploreLimits limits_of(const JobSpec& job) {
  ExploreLimits l;
  l.max_depth = job.budgets.max_depth;
  l.max_vars = job.budgets.max_vars;
  l.max_terms = job.budgets.max_terms;
  l.threads = job.threads;
  return l;
}

// --- commands ---------------------------------------------------------------

inline RunResult classify_cmd(const JobSpec& job) {
  const Resolved r = resolve(job);
  const TypeClassification c = classify(r.cartan);
  json comps = json::array();
  for (const auto& comp : c.components) {
    json v = json::array();
    for (std::size_t i : comp.vertices) v.push_back(i + 1);
    comps.push_back({{"label", comp.label()}, {"vertices", v}});
  }
  if (job.text) {
    std::string out = c.label() + "\n";
    out += "Cartan matrix:\n" + matrix_text(r.cartan.matrix());
    out += "symmetrizer:";
    for (auto d : r.cartan.symmetrizer().d) out += " " + std::to_string(d);
    return {kOk, out + "\n", ""};
  }
  json j;
  j["type"] = c.label();
  j["finite"] = c.finite;
  j["affine"] = c.affine;
  j["components"] = comps;
  j["cartan"] = io::matrix_json(r.cartan.matrix());
  j["symmetrizer"] = r.cartan.symmetrizer().d;
  return {kOk, dump(j), ""};
}

inline RunResult mutate_cmd(const JobSpec& job) {
  const Resolved r = resolve(job);
  Seed s = initial_seed(r.exchange);
  for (long k : job.k) s = mutate(s, io::vertex(k, s.rank()));
  if (job.text) {
    std::string out = "matrix:\n" + matrix_text(s.matrix.matrix()) + "cluster:\n";
    for (std::size_t i = 0; i < s.rank(); ++i) out += "  x" + std::to_string(i + 1) + " = " + both_forms(s.cluster[i]) + "\n";
    return {kOk, out, ""};
  }
  json cluster = json::array();
  for (const auto& x : s.cluster) cluster.push_back(canonical_string(x));
  json j;
  j["matrix"] = io::matrix_json(s.matrix.matrix());
  j["cluster"] = cluster;
  j["sequence"] = job.k;
  return {kOk, dump(j), ""};
}

inline RunResult enumerate_cmd(const JobSpec& job) {
  const Resolved r = resolve(job);
  const Enumeration e = enumerate(r.exchange, limits_of(job));
  RunResult res;
  res.exit_code = e.complete ? kOk : kBudgetExceeded;
  if (!e.complete) res.err = "budget exceeded (" + e.budget_reason + "); output is partial\n";
  if (job.text) {
    std::string out;
    const auto& vars = e.set.variables();
    for (std::size_t i = 0; i < vars.size(); ++i) out += std::to_string(i) + ": " + both_forms(vars[i]) + "\n";
    out += std::to_string(vars.size()) + " variables, " + std::to_string(e.set.clusters().size()) + " clusters";
    out += e.complete ? ", complete\n" : ", incomplete\n";
    res.out = out;
    return res;
  }
  json j;
  j["variables"] = e.set.keys();
  j["clusters"] = e.set.clusters();
  j["complete"] = e.complete;
  res.out = dump(j);
  return res;
}

inline RunResult orbit_cmd(const JobSpec& job) {
  require(job.mmin <= 0 && job.mmax >= 0, "--mmin must be <= 0 and --mmax >= 0");
  const Resolved r = resolve(job);
  const CoxeterAuto t = coxeter_automorphism(acyclic_quiver(r));
  const auto order = order_of_automorphism(t, power_bound(job.budgets, t.cartan()), job.budgets.max_terms);
  const CoxeterOrbit orb = orbit(t, job.mmin, job.mmax, job.budgets.max_terms);
  RunResult res;
  if (!orb.complete) {
    res.exit_code = kBudgetExceeded;
    res.err = "budget exceeded (max_terms); orbit is partial\n";
  }
  json entries = json::array();
  std::string text = "order: " + (order ? std::to_string(*order) : std::string("not found")) + "\n";
  for (long m = job.mmin; m <= job.mmax; ++m)
    for (std::size_t k = 0; k < t.rank(); ++k) {
      auto it = orb.entries.find({m, k});
      if (it == orb.entries.end()) continue;
      entries.push_back({{"m", m}, {"k", k + 1}, {"value", canonical_string(it->second)}});
      text += "T^" + std::to_string(m) + "(u" + std::to_string(k + 1) + ") = " + both_forms(it->second) + "\n";
    }
  if (job.text) {
    res.out = text;
    return res;
  }
  json j;
  j["order"] = order ? json(*order) : json(nullptr);
  j["entries"] = entries;
  res.out = dump(j);
  return res;
}

inline RunResult order_cmd(const JobSpec& job) {
  const Resolved r = resolve(job);
  const ValuedQuiver& q = acyclic_quiver(r);
  const long bound = power_bound(job.budgets, q.cartan());
  const auto symbolic = order_of_T(q, bound, job.budgets.max_terms);
  const bool finite = is_finite_type(r.cartan);
  json j;
  j["order_T"] = symbolic ? json(*symbolic) : json(nullptr);
  j["order_sigma"] = nullptr;
  j["predicted"] = nullptr;
  j["components"] = json::array();
  std::string text = "order of T: " + (symbolic ? std::to_string(*symbolic) : std::string("not found")) + "\n";
  if (finite) {
    RootSystem rs(r.cartan);
    const long sigma = order_of_sigma(rs, q);
    j["order_sigma"] = sigma;
    j["predicted"] = predicted_order(r.cartan);
    text += "order of sigma: " + std::to_string(sigma) + "\n";
    text += "predicted: " + std::to_string(predicted_order(r.cartan)) + "\n";
    for (const auto& c : component_orders(r.cartan)) {
      json v = json::array();
      for (std::size_t i : c.vertices) v.push_back(i + 1);
      j["components"].push_back({{"vertices", v},
                                 {"coxeter_number", c.coxeter_number},
                                 {"w0_is_minus_one", c.w0_is_minus_one},
                                 {"predicted", c.predicted_order}});
      text += "  component " + v.dump() + ": h = " + std::to_string(c.coxeter_number) +
              ", w0 = -1: " + (c.w0_is_minus_one ? "yes" : "no") + ", order " + std::to_string(c.predicted_order) + "\n";
    }
  }
  RunResult res{kOk, job.text ? text : dump(j), ""};
  if (!symbolic) {
    res.exit_code = kBudgetExceeded;
    res.err = "no T^m = id for m <= " + std::to_string(bound) + (finite ? " (budget exceeded)\n" : " (infinite type)\n");
  }
  return res;
}

inline RunResult verify_cmd(const JobSpec& job) {
  VerifyOptions opt;
  opt.max_rank = job.max_rank;
  opt.limits = limits_of(job);
  const VerifyReport report = run_verification(job.suite, opt);
  RunResult res{report.passed() ? kOk : kVerifyFailed, "", ""};
  if (job.text) {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
      failed += !c.passed;
      res.out += std::string(c.passed ? "PASS " : "FAIL ") + c.suite + ": " + c.name +
                 (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
    }
    res.out += std::to_string(report.checks.size() - failed) + "/" + std::to_string(report.checks.size()) + " passed\n";
    return res;
  }
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json j;
  j["suite"] = job.suite;
  j["max_rank"] = job.max_rank;
  j["passed"] = report.passed();
  j["checks"] = checks;
  res.out = dump(j);
  return res;
}

inline RunResult examples_cmd() {
  std::string out =
      "builtin types: A<n> B<n> C<n> D<n> E6 E7 E8 F4 G2, rank2:a,b (Cartan [[2,-a],[-b,2]]),\n"
      "               affine-A1, affine-A2\n"
      "default orientation: every edge points to the smaller index (A3 gives 3->2->1)\n"
      "orientations: default | bipartite | bipartite-dual | 3,2,1-path[;chain...] | "
      "{\"edges\": [[from,to],...]}\n"
      "\n"
      "examples:\n"
      "  clustercox enumerate --type A3 --orientation 3,2,1-path\n"
      "  clustercox enumerate --type A3 --orientation '1,2;3,2' --format text\n"
      "  clustercox mutate --matrix '[[0,-1,0],[1,0,-1],[0,1,0]]' --k 1\n"
      "  clustercox orbit --type B2 --mmax 3\n"
      "  clustercox order --type F4\n"
      "  clustercox classify --matrix '[[0,2],[-2,0]]'\n"
      "  clustercox verify all --max-rank 3\n"
      "verification suites: all";
  for (const auto& s : suite_names()) out += " " + s;
  return {kOk, out + "\n", ""};
}

}  // namespace detail

inline RunResult run(const JobSpec& job) {
  try {
    clustercox::detail::require(job.budgets.max_depth > 0 && job.budgets.max_vars > 0 &&
                                    job.budgets.max_terms > 0 && job.budgets.max_power.value_or(1) > 0,
                                "budgets must be positive");
    if (job.command == "classify") return detail::classify_cmd(job);
    if (job.command == "mutate") return detail::mutate_cmd(job);
    if (job.command == "enumerate") return detail::enumerate_cmd(job);
    if (job.command == "orbit") return detail::orbit_cmd(job);
    if (job.command == "order") return detail::order_cmd(job);
    if (job.command == "verify") return detail::verify_cmd(job);
    if (job.command == "examples") return detail::examples_cmd();
    throw StructuralError("unknown command '" + job.command + "'");
  } catch (const StructuralError& e) {
    return {kInputError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvariantViolation& e) {
    return {kInternalError, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

/// Parses argv, runs the job and writes its output.
inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout,
                      std::ostream& err = std::cerr) {
  CLI::App app{"Exact cluster variables, Coxeter automorphisms and root-system checks", "clustercox"};
  app.require_subcommand(1);
  JobSpec job;
  try {
    job.budgets = budgets_from_env();
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::string format = "json";

  auto input_flags = [&](CLI::App* sub) {
    sub->add_option("--matrix", job.matrix, "exchange matrix B as JSON");
    sub->add_option("--cartan", job.cartan, "Cartan matrix A as JSON");
    sub->add_option("--type", job.type, "builtin type, e.g. A3, B2, rank2:2,2, affine-A2");
    sub->add_option("--input", job.input_file, "JSON file with a matrix or {\"n\",\"b\"|\"a\"|\"type\"}");
    sub->add_option("--orientation", job.orientation, "orientation for --cartan/--type");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-depth", job.budgets.max_depth)->check(CLI::PositiveNumber);
    sub->add_option("--max-vars", job.budgets.max_vars)->check(CLI::PositiveNumber);
    sub->add_option("--max-terms", job.budgets.max_terms)->check(CLI::PositiveNumber);
    sub->add_option("--max-power", job.budgets.max_power)->check(CLI::PositiveNumber);
    sub->add_option("--threads", job.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
  };

  auto* classify = app.add_subcommand("classify", "finite/affine/indefinite type and Dynkin label");
  auto* mutate = app.add_subcommand("mutate", "mutate the initial seed along --k");
  auto* enumerate = app.add_subcommand("enumerate", "all cluster variables (breadth-first)");
  auto* orbit = app.add_subcommand("orbit", "T^m(u_k) for mmin <= m <= mmax");
  auto* order = app.add_subcommand("order", "order of T, of sigma, and the predicted order");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* examples = app.add_subcommand("examples", "builtin types and sample commands");
  for (auto* sub : {classify, mutate, enumerate, orbit, order}) input_flags(sub);
  for (auto* sub : {classify, mutate, enumerate, orbit, order, verify}) common(sub);
  mutate->add_option("--k", job.k, "1-based directions, e.g. 1,2,1")->delimiter(',')->required();
  for (auto* sub : {orbit}) {
    sub->add_option("--mmin", job.mmin);
    sub->add_option("--mmax", job.mmax);
  }
  std::string suites = "all";
  for (const auto& s : suite_names()) suites += ", " + s;
  verify->add_option("suite", job.suite, "one of: " + suites);
  verify->add_option("--max-rank", job.max_rank)->check(CLI::Range(1, 8));
  (void)examples;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }
  job.command = app.get_subcommands().front()->get_name();
  job.text = format == "text";
  const RunResult r = run(job);
  out << r.out;
  err << r.err;
  return r.exit_code;
}

}  // namespace clustercox::cli
