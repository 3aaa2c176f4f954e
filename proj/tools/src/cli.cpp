#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "logitlab/bounds.hpp"
#include "logitlab/coupling.hpp"
#include "logitlab/error.hpp"
#include "logitlab/exact.hpp"
#include "logitlab/game_io.hpp"
#include "logitlab/generators.hpp"
#include "logitlab/metrics.hpp"
#include "logitlab/version.hpp"

namespace logitlab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kDefaultExactLimit = 1024;

struct RunConfig {
  std::string command;
  std::string game_path;
  std::vector<double> betas;
  double eps = kDefaultEpsilon;
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "json";

  std::size_t cap = kDefaultMixingCap;
  std::size_t exact_limit = kDefaultExactLimit;
  bool no_exact = false;
  std::vector<StateIndex> set;

  std::string mode = "coupling";
  std::size_t t = 0;
  std::size_t trials = 1000;
  std::size_t random_pairs = 0;
  StateIndex start = 0;
  std::vector<StateIndex> target{0};
  std::size_t horizon = kDefaultHorizon;
  std::string trials_out;

  std::string family = "random";
  GeneratorSpec gen;
  std::string graph = "ring";
};

// Shortest round-trip representation; independent of the global locale.
std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, result.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

Json optional_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double single_beta(const RunConfig& c) { return c.betas.empty() ? 0.0 : c.betas.front(); }

Json provenance(const RunConfig& c) {
  Json config;
  config["command"] = c.command;
  if (!c.game_path.empty()) config["game"] = c.game_path;
  if (c.command == "sweep") {
    config["beta"] = c.betas;
  } else if (!c.betas.empty()) {
    config["beta"] = c.betas.front();
  }
  config["eps"] = c.eps;
  config["seed"] = c.seed;
  config["format"] = c.format;
  if (c.command == "simulate") {
    config["mode"] = c.mode;
    config["trials"] = c.trials;
    if (c.mode == "coupling") {
      config["t"] = c.t;
      config["random_pairs"] = c.random_pairs;
    } else {
      config["start"] = c.start;
      config["target"] = c.target;
      config["horizon"] = c.horizon;
    }
  }
  if (c.command == "bottleneck" && !c.set.empty()) config["set"] = c.set;
  if (c.command == "mix" || c.command == "bounds" || c.command == "sweep") {
    config["cap"] = c.cap;
  }
  Json head;
  head["tool"] = "logitlab";
  head["version"] = std::string(kVersion);
  head["rng"] = "splitmix64";
  head["config"] = std::move(config);
  return head;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty() || c.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw ArgumentError("cannot open output file " + c.output);
  file << text;
  if (!file) throw ArgumentError("failed writing " + c.output);
}

void emit_json(const RunConfig& c, Json body, std::ostream& out) {
  Json doc = provenance(c);
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  emit(c, doc.dump(2) + "\n", out);
}

Json game_summary(const Game& g) {
  Json j;
  j["kind"] = std::string(to_string(g.kind()));
  j["players"] = g.players();
  j["radices"] = std::vector<int>(g.space().radices().begin(), g.space().radices().end());
  j["states"] = g.size();
  return j;
}

// The Gibbs measure when a potential exists, else the linear solve.
Distribution stationary_of(const Game& g, const TransitionMatrix& p, double beta) {
  if (g.potential()) return gibbs(*g.potential(), beta);
  return stationary(p);
}

Json bound_json(const BoundEntry& e) {
  Json j;
  j["id"] = e.id;
  j["kind"] = std::string(to_string(e.kind));
  j["target"] = std::string(to_string(e.target));
  j["formula"] = e.formula;
  j["applicable"] = e.applicable;
  j["reason"] = e.reason;
  j["value"] = e.applicable ? finite_or_null(e.value) : Json(nullptr);
  j["exact"] = optional_number(e.exact);
  j["satisfied"] = e.satisfied ? Json(*e.satisfied) : Json(nullptr);
  return j;
}

ExactQuantities maybe_exact(const RunConfig& c, const Game& g, double beta) {
  if (c.no_exact || g.size() > c.exact_limit) return {};
  return exact_quantities(g, beta, c.eps, c.cap);
}

// ---------------------------------------------------------------------------
// Commands

void cmd_generate(const RunConfig& c, std::ostream& out) {
  GeneratorSpec spec = c.gen;
  const auto family = parse_family(c.family == "random" ? "random_potential" : c.family);
  if (!family) throw ArgumentError("unknown family " + c.family);
  spec.family = *family;
  const auto shape = parse_graph_shape(c.graph);
  if (!shape) throw ArgumentError("unknown graph " + c.graph);
  spec.graph = *shape;
  spec.seed = c.seed;
  emit(c, serialize_game(generate(spec)) + "\n", out);
}

void cmd_analyze(const RunConfig& c, std::ostream& out) {
  const Game g = load_game(c.game_path);
  const double beta = single_beta(c);
  const TransitionMatrix p = transition_matrix(LogitChain(g, beta));
  const Distribution pi = stationary_of(g, p, beta);
  const ReversibilityReport rev = reversibility_check(p, pi);
  Json body;
  body["game"] = game_summary(g);
  body["stationary"] = pi;
  body["stationary_source"] = g.potential() ? "gibbs" : "linear_solve";
  body["stationary_residual"] = stationary_residual(p, pi);
  body["max_row_error"] = max_row_error(p);
  body["reversibility"] = {{"max_violation", rev.max_violation},
                           {"witness", {rev.witness.first, rev.witness.second}}};
  if (rev.max_violation <= kReversibilityTolerance) {
    const SpectrumReport s = spectrum(p, pi);
    body["spectrum"] = {{"eigenvalues", s.eigenvalues},
                        {"lambda2", s.lambda2()},
                        {"lambda_min", s.lambda_min()},
                        {"lambda_star", s.lambda_star},
                        {"t_rel", finite_or_null(s.t_rel)}};
  } else {
    body["spectrum"] = nullptr;
  }
  emit_json(c, std::move(body), out);
}

void cmd_mix(const RunConfig& c, std::ostream& out) {
  const Game g = load_game(c.game_path);
  const double beta = single_beta(c);
  const TransitionMatrix p = transition_matrix(LogitChain(g, beta));
  const MixingResult mix = exact_mixing_time(p, stationary_of(g, p, beta), c.eps, c.cap);
  if (c.format == "csv") {
    std::string text = "t,d\n";
    for (std::size_t t = 0; t < mix.distances.size(); ++t) {
      text += std::to_string(t) + "," + number(mix.distances[t]) + "\n";
    }
    emit(c, text, out);
    return;
  }
  Json body;
  body["game"] = game_summary(g);
  body["t_mix"] = mix.t_mix;
  body["distances"] = mix.distances;
  emit_json(c, std::move(body), out);
}

void cmd_zeta(const RunConfig& c, std::ostream& out) {
  const Game g = load_game(c.game_path);
  const PotentialTable phi = potential_of(g);
  const PotentialStats stats = potential_stats(phi, g.space());
  const HillReport hill = zeta(phi, g.space());
  Json body;
  body["game"] = game_summary(g);
  body["delta_phi"] = {{"value", stats.global_variation},
                       {"argmax", stats.argmax},
                       {"argmin", stats.argmin}};
  body["local_delta_phi"] = {{"value", stats.local_variation},
                             {"high", stats.local_high},
                             {"low", stats.local_low}};
  body["zeta"] = {{"value", hill.zeta}, {"x", hill.x}, {"y", hill.y}, {"peak", hill.peak}};
  emit_json(c, std::move(body), out);
}

void cmd_cutwidth(const RunConfig& c, std::ostream& out) {
  const Game g = load_game(c.game_path);
  if (!g.coordination()) {
    throw HypothesisError("cutwidth needs a graphical coordination game");
  }
  const CutwidthReport r = cutwidth(g.coordination()->graph);
  Json body;
  body["game"] = game_summary(g);
  body["cutwidth"] = r.cutwidth;
  body["ordering"] = r.ordering;
  body["cuts"] = r.cuts;
  emit_json(c, std::move(body), out);
}

Json bottleneck_json(const BottleneckResult& b) {
  return {{"pi_r", b.pi_r},
          {"flow", b.flow},
          {"ratio", b.ratio},
          {"lower_bound", finite_or_null(b.lower_bound)}};
}

void cmd_bottleneck(const RunConfig& c, std::ostream& out) {
  const Game g = load_game(c.game_path);
  const double beta = single_beta(c);
  const TransitionMatrix p = transition_matrix(LogitChain(g, beta));
  const Distribution pi = stationary_of(g, p, beta);
  Json body;
  body["game"] = game_summary(g);
  if (!c.set.empty()) {
    body["set"] = {{"family", "user"}, {"states", c.set}};
    body["bottleneck"] = bottleneck_json(bottleneck_ratio(p, pi, c.set, c.eps));
  } else {
    PotentialTable phi;
    if (g.potential()) {
      phi = *g.potential();
    } else {
      // Without a potential, rank states by -ln pi instead.
      phi.values.resize(pi.size());
      for (StateIndex x = 0; x < pi.size(); ++x) phi.values[x] = -std::log(pi[x]);
    }
    const auto best = best_bottleneck(p, pi, phi, g.space(), c.eps);
    if (!best) throw HypothesisError("no candidate set has pi(R) <= 1/2");
    body["set"] = {{"family", best->set.family},
                   {"parameter", best->set.parameter},
                   {"states", best->set.states}};
    body["bottleneck"] = bottleneck_json(best->result);
    body["candidates_evaluated"] = best->evaluated;
  }
  emit_json(c, std::move(body), out);
}

void cmd_bounds(const RunConfig& c, std::ostream& out) {
  const Game g = load_game(c.game_path);
  const double beta = single_beta(c);
  const StructureMetrics metrics = structure_metrics(g);
  const ExactQuantities exact = maybe_exact(c, g, beta);
  const BoundsReport report = theory_report(g, beta, c.eps, metrics, exact);
  if (c.format == "csv") {
    std::string text = "id,kind,target,applicable,value,exact,satisfied,formula,reason\n";
    for (const BoundEntry& e : report.entries) {
      text += e.id + "," + std::string(to_string(e.kind)) + "," +
              std::string(to_string(e.target)) + "," + (e.applicable ? "true" : "false") + "," +
              (e.applicable ? number(e.value) : "") + "," + (e.exact ? number(*e.exact) : "") +
              "," + (e.satisfied ? (*e.satisfied ? "true" : "false") : "") + "," +
              csv_field(e.formula) + "," + csv_field(e.reason) + "\n";
    }
    emit(c, text, out);
    return;
  }
  Json body;
  body["game"] = game_summary(g);
  Json m;
  if (metrics.stats) {
    m["delta_phi"] = metrics.stats->global_variation;
    m["local_delta_phi"] = metrics.stats->local_variation;
  }
  if (metrics.hill) m["zeta"] = metrics.hill->zeta;
  if (metrics.cutwidth) m["cutwidth"] = metrics.cutwidth->cutwidth;
  body["metrics"] = m.is_null() ? Json::object() : m;
  Json ex = Json::object();
  if (exact.t_mix) ex["t_mix"] = *exact.t_mix;
  if (exact.t_rel) ex["t_rel"] = optional_number(exact.t_rel);
  if (exact.pi_min) ex["pi_min"] = *exact.pi_min;
  if (exact.bottleneck) {
    ex["bottleneck"] = bottleneck_json(exact.bottleneck->result);
    ex["bottleneck"]["family"] = exact.bottleneck->set.family;
    ex["bottleneck"]["parameter"] = exact.bottleneck->set.parameter;
  }
  body["exact"] = std::move(ex);
  if (report.clique) {
    body["clique"] = {{"k_continuous", report.clique->k_continuous},
                      {"k_star", report.clique->k_star},
                      {"k_argmax", report.clique->k_argmax},
                      {"zeta", report.clique->zeta}};
  }
  Json entries = Json::array();
  for (const BoundEntry& e : report.entries) entries.push_back(bound_json(e));
  body["bounds"] = std::move(entries);
  body["all_satisfied"] = report.all_satisfied();
  emit_json(c, std::move(body), out);
}

void write_trials(const std::string& path, const std::string& text, std::ostream& out) {
  RunConfig sink;
  sink.output = path;
  emit(sink, text, out);
}

void cmd_simulate(const RunConfig& c, std::ostream& out) {
  const Game g = load_game(c.game_path);
  const LogitChain chain(g, single_beta(c));
  Json body;
  body["game"] = game_summary(g);
  std::string csv;
  if (c.mode == "coupling") {
    const auto pairs = default_pairs(g.space(), c.random_pairs, c.seed);
    if (pairs.empty()) throw ArgumentError("no coupling pairs: the game has one state");
    const TvEstimate e = coupling_tv_bound(chain, c.t, c.trials, pairs, c.seed);
    csv = "pair,x,y,trial,seed,tau\n";
    for (std::size_t k = 0; k < e.runs.size(); ++k) {
      const CouplingRun& r = e.runs[k];
      csv += std::to_string(k / c.trials) + "," + std::to_string(r.x) + "," +
             std::to_string(r.y) + "," + std::to_string(k % c.trials) + "," +
             std::to_string(r.seed) + "," + (r.tau ? std::to_string(*r.tau) : "") + "\n";
    }
    Json per_pair = Json::array();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      per_pair.push_back({{"x", pairs[k].first},
                          {"y", pairs[k].second},
                          {"uncoupled_fraction", e.per_pair[k]}});
    }
    body["coupling"] = {{"t", c.t},
                        {"estimate", e.estimate},
                        {"half_width", e.half_width},
                        {"upper", e.upper},
                        {"worst", {e.worst.first, e.worst.second}},
                        {"pairs", std::move(per_pair)}};
  } else if (c.mode == "hitting") {
    for (StateIndex s : c.target) {
      if (s >= g.size()) throw RangeError("target state out of range");
    }
    std::vector<bool> in_target(g.size(), false);
    for (StateIndex s : c.target) in_target[s] = true;
    const HittingEstimate e = estimate_hitting(
        chain, c.start, [&](StateIndex x) { return in_target[x]; }, c.trials, c.horizon,
        c.seed);
    csv = "trial,seed,time\n";
    for (std::size_t k = 0; k < e.trials.size(); ++k) {
      const HittingTrial& t = e.trials[k];
      csv += std::to_string(k) + "," + std::to_string(t.seed) + "," +
             (t.time ? std::to_string(*t.time) : "") + "\n";
    }
    body["hitting"] = {{"start", c.start},
                       {"target", c.target},
                       {"trials", c.trials},
                       {"censored", e.censored},
                       {"mean", optional_number(e.mean)},
                       {"median", optional_number(e.median)}};
  } else {
    throw ArgumentError("unknown simulate mode " + c.mode);
  }
  if (!c.trials_out.empty()) write_trials(c.trials_out, csv, out);
  if (c.format == "csv") {
    emit(c, csv, out);
  } else {
    emit_json(c, std::move(body), out);
  }
}

struct SweepRow {
  double beta = 0.0;
  std::optional<std::size_t> t_mix;
  std::optional<double> t_rel;
  BoundsReport report;
};

void cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.betas.empty()) throw ArgumentError("sweep needs at least one beta");
  const Game g = load_game(c.game_path);
  const StructureMetrics metrics = structure_metrics(g);
  std::vector<SweepRow> rows;
  for (double beta : c.betas) {
    const ExactQuantities exact = maybe_exact(c, g, beta);
    rows.push_back({beta, exact.t_mix, exact.t_rel,
                    theory_report(g, beta, c.eps, metrics, exact)});
  }

  // Least-squares slope of ln t_mix against beta, over rows with t_mix >= 1.
  std::vector<std::pair<double, double>> points;
  for (const SweepRow& r : rows) {
    if (r.t_mix && *r.t_mix >= 1) points.emplace_back(r.beta, std::log(double(*r.t_mix)));
  }
  std::optional<double> slope;
  if (points.size() >= 2) {
    double mx = 0, my = 0;
    for (auto [x, y] : points) {
      mx += x;
      my += y;
    }
    mx /= points.size();
    my /= points.size();
    double sxy = 0, sxx = 0;
    for (auto [x, y] : points) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    if (sxx > 0) slope = sxy / sxx;
  }
  std::optional<double> spread;
  std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
  for (const SweepRow& r : rows) {
    if (!r.t_mix) continue;
    lo = std::min(lo, *r.t_mix);
    hi = std::max(hi, *r.t_mix);
  }
  if (hi > 0 && lo > 0) spread = static_cast<double>(hi) / static_cast<double>(lo);

  if (c.format == "csv") {
    std::string text = "beta,t_mix_exact,t_rel";
    for (const BoundEntry& e : rows.front().report.entries) text += "," + e.id;
    text += "\n";
    for (const SweepRow& r : rows) {
      text += number(r.beta) + "," + (r.t_mix ? std::to_string(*r.t_mix) : "") + "," +
              (r.t_rel ? number(*r.t_rel) : "");
      for (const BoundEntry& e : r.report.entries) {
        text += ",";
        if (e.applicable) text += number(e.value);
      }
      text += "\n";
    }
    emit(c, text, out);
    if (slope) err << "ln(t_mix) slope vs beta: " << number(*slope) << "\n";
    return;
  }
  Json body;
  body["game"] = game_summary(g);
  if (metrics.stats) body["delta_phi"] = metrics.stats->global_variation;
  Json list = Json::array();
  for (const SweepRow& r : rows) {
    Json row;
    row["beta"] = r.beta;
    row["t_mix_exact"] = r.t_mix ? Json(*r.t_mix) : Json(nullptr);
    row["t_rel"] = optional_number(r.t_rel);
    Json bounds = Json::object();
    for (const BoundEntry& e : r.report.entries) {
      bounds[e.id] = e.applicable ? finite_or_null(e.value) : Json(nullptr);
    }
    row["bounds"] = std::move(bounds);
    row["all_satisfied"] = r.report.all_satisfied();
    list.push_back(std::move(row));
  }
  body["rows"] = std::move(list);
  body["fit"] = {{"log_tmix_slope", optional_number(slope)},
                 {"tmix_max_over_min", optional_number(spread)}};
  emit_json(c, std::move(body), out);
}

// ---------------------------------------------------------------------------
// Exit codes

int fail(std::ostream& err, const std::exception& e, int code) {
  err << "logitlab: " << e.what() << "\n";
  return code;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "generate") cmd_generate(c, out);
    else if (c.command == "analyze") cmd_analyze(c, out);
    else if (c.command == "mix") cmd_mix(c, out);
    else if (c.command == "zeta") cmd_zeta(c, out);
    else if (c.command == "cutwidth") cmd_cutwidth(c, out);
    else if (c.command == "bottleneck") cmd_bottleneck(c, out);
    else if (c.command == "bounds") cmd_bounds(c, out);
    else if (c.command == "simulate") cmd_simulate(c, out);
    else if (c.command == "sweep") cmd_sweep(c, out, err);
    return 0;
  } catch (const BudgetError& e) {
    return fail(err, e, 2);
  } catch (const TruncationError& e) {
    return fail(err, e, 2);
  } catch (const HypothesisError& e) {
    return fail(err, e, 2);
  } catch (const NotPotentialError& e) {
    return fail(err, e, 2);
  } catch (const NotReversibleError& e) {
    return fail(err, e, 2);
  } catch (const std::exception& e) {
    return fail(err, e, 1);
  }
}

void add_game(CLI::App* sub, RunConfig& c) {
  sub->add_option("--game", c.game_path, "Game description (.game.json)")
      ->required()
      ->check(CLI::ExistingFile);
}

void add_beta(CLI::App* sub, RunConfig& c) {
  sub->add_option("--beta", c.betas, "Inverse noise")
      ->required()
      ->expected(1)
      ->check(CLI::NonNegativeNumber);
}

void add_eps(CLI::App* sub, RunConfig& c) {
  sub->add_option("--eps", c.eps, "Total-variation threshold")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
}

void add_output(CLI::App* sub, RunConfig& c, bool csv) {
  sub->add_option("-o,--output", c.output, "Output file (default: standard output)");
  if (csv) {
    sub->add_option("--format", c.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Logit dynamics analysis for finite strategic games", "logitlab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Write a generated game as JSON");
  generate->add_option("--family", c.family, "coordination, lbpot, dominant or random")
      ->required()
      ->check(CLI::IsMember({"coordination", "lbpot", "dominant", "random"}));
  generate->add_option("--n", c.gen.n, "Players")->capture_default_str();
  generate->add_option("--m", c.gen.m, "Strategies per player")->capture_default_str();
  generate->add_option("--g", c.gen.g, "lbpot plateau height")->capture_default_str();
  generate->add_option("--l", c.gen.l, "lbpot slope")->capture_default_str();
  generate->add_option("--graph", c.graph, "ring, clique or path")
      ->capture_default_str()
      ->check(CLI::IsMember({"ring", "clique", "path"}));
  generate->add_option("--a", c.gen.payoffs.a, "Payoff for (0, 0)")->capture_default_str();
  generate->add_option("--b", c.gen.payoffs.b, "Payoff for (1, 1)")->capture_default_str();
  generate->add_option("--c", c.gen.payoffs.c, "Payoff for (0, 1)")->capture_default_str();
  generate->add_option("--d", c.gen.payoffs.d, "Payoff for (1, 0)")->capture_default_str();
  generate->add_option("--range", c.gen.range, "Random potential range")->capture_default_str();
  generate->add_option("--seed", c.seed, "Generator seed")->capture_default_str();
  add_output(generate, c, false);

  auto* analyze = app.add_subcommand("analyze", "Stationary law, reversibility, spectrum");
  add_game(analyze, c);
  add_beta(analyze, c);
  add_output(analyze, c, false);

  auto* mix = app.add_subcommand("mix", "Exact mixing time and d(t) curve");
  add_game(mix, c);
  add_beta(mix, c);
  add_eps(mix, c);
  mix->add_option("--cap", c.cap, "Largest t tried")->capture_default_str();
  add_output(mix, c, true);

  auto* zeta_cmd = app.add_subcommand("zeta", "Potential variation and hill metric");
  add_game(zeta_cmd, c);
  add_output(zeta_cmd, c, false);

  auto* cut = app.add_subcommand("cutwidth", "Cutwidth of the social graph");
  add_game(cut, c);
  add_output(cut, c, false);

  auto* bottleneck = app.add_subcommand("bottleneck", "Bottleneck ratio of a set");
  add_game(bottleneck, c);
  add_beta(bottleneck, c);
  add_eps(bottleneck, c);
  bottleneck->add_option("--set", c.set, "States of R (default: family search)")
      ->delimiter(',');
  add_output(bottleneck, c, false);

  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound against exact values");
  add_game(bounds, c);
  add_beta(bounds, c);
  add_eps(bounds, c);
  bounds->add_option("--cap", c.cap, "Largest t tried")->capture_default_str();
  bounds->add_option("--exact-limit", c.exact_limit, "Largest |S| for exact cross-checks")
      ->capture_default_str();
  bounds->add_flag("--no-exact", c.no_exact, "Skip exact cross-checks");
  add_output(bounds, c, true);

  auto* simulate = app.add_subcommand("simulate", "Coupling or hitting-time simulation");
  add_game(simulate, c);
  add_beta(simulate, c);
  simulate->add_option("--mode", c.mode, "coupling or hitting")
      ->capture_default_str()
      ->check(CLI::IsMember({"coupling", "hitting"}));
  simulate->add_option("--t", c.t, "Coupling horizon t")->capture_default_str();
  simulate->add_option("--trials", c.trials, "Trials (per pair for coupling)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--random-pairs", c.random_pairs, "Extra random start pairs")
      ->capture_default_str();
  simulate->add_option("--start", c.start, "Hitting start state")->capture_default_str();
  simulate->add_option("--target", c.target, "Hitting target states")->delimiter(',');
  simulate->add_option("--horizon", c.horizon, "Hitting censoring horizon")
      ->capture_default_str();
  simulate->add_option("--seed", c.seed, "Root seed")->capture_default_str();
  simulate->add_option("--trials-out", c.trials_out, "Per-trial CSV file");
  add_output(simulate, c, true);

  auto* sweep = app.add_subcommand("sweep", "Exact quantities and bounds over a beta list");
  add_game(sweep, c);
  sweep->add_option("--beta", c.betas, "Comma-separated inverse noise values")
      ->required()
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  add_eps(sweep, c);
  sweep->add_option("--cap", c.cap, "Largest t tried")->capture_default_str();
  sweep->add_option("--exact-limit", c.exact_limit, "Largest |S| for exact values")
      ->capture_default_str();
  add_output(sweep, c, true);

  if (argc <= 1) {
    err << app.help();
    return 1;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "logitlab: " << e.what() << "\n";
    return 1;
  }
  c.command = app.get_subcommands().front()->get_name();
  return dispatch(c, out, err);
}

}  // namespace logitlab::cli
