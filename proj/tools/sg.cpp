// Command-line front end: balance / analyze / simulate / sweep / montecarlo /
// hypercube subcommands over the core library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sg/dynamics.hpp"
#include "sg/experiments.hpp"
#include "sg/hypercube.hpp"
#include "sg/selection.hpp"
#include "sg/signed_graph.hpp"
#include "sg/spectral.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
  std::string graph_path;
  std::string selection = "uniform-neighbor";
  std::string selection_matrix;
  std::string rule = "symmetric";
  double alpha = 0.5;
  double beta = 0.0;
  std::string asym = "0.3333333333333333,0.3333333333333333,0.3333333333333334";
  double bound = 1.0;
  std::string x0;
  long long horizon = 10000;
  long long record_every = 0;
  std::uint64_t seed = 1;
  int trials = 100;
  std::string out;
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool dynamics) {
  cmd->add_option("--graph", o.graph_path, "graph file")->required();
  cmd->add_option("--selection", o.selection,
                  "uniform-neighbor|complete|ring-half|custom");
  cmd->add_option("--selection-matrix", o.selection_matrix,
                  "CSV matrix for --selection custom");
  cmd->add_option("--alpha", o.alpha);
  cmd->add_option("--beta", o.beta);
  cmd->add_option("--config", o.config_path, "JSON config overriding flags");
  if (dynamics) {
    cmd->add_option("--rule", o.rule,
                    "symmetric|asymmetric-constrained|altafini");
    cmd->add_option("--asym", o.asym, "a,b,c probabilities");
    cmd->add_option("--bound", o.bound, "belief bound A");
    cmd->add_option("--x0", o.x0, "comma-separated initial beliefs");
    cmd->add_option("--horizon", o.horizon);
    cmd->add_option("--record-every", o.record_every);
    cmd->add_option("--seed", o.seed);
    cmd->add_option("--trials", o.trials);
  }
  cmd->add_option("--out", o.out, "output path");
}

// --config JSON fills any value the user did not pass explicitly.
void apply_config(const CLI::App* cmd, CommonOpts& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw sg::InputError("cannot open config: " + o.config_path);
  json c = json::parse(in);
  auto absent = [&](const std::string& flag) {
    auto* opt = cmd->get_option_no_throw(flag);
    return opt == nullptr || opt->count() == 0;
  };
  auto take = [&](const char* key, const std::string& flag, auto& slot) {
    if (c.contains(key) && absent(flag)) c.at(key).get_to(slot);
  };
  take("graph", "--graph", o.graph_path);
  take("selection", "--selection", o.selection);
  take("selection_matrix", "--selection-matrix", o.selection_matrix);
  take("rule", "--rule", o.rule);
  take("alpha", "--alpha", o.alpha);
  take("beta", "--beta", o.beta);
  take("asym", "--asym", o.asym);
  take("bound", "--bound", o.bound);
  take("x0", "--x0", o.x0);
  take("horizon", "--horizon", o.horizon);
  take("record_every", "--record-every", o.record_every);
  take("seed", "--seed", o.seed);
  take("trials", "--trials", o.trials);
  take("out", "--out", o.out);
}

std::vector<double> parse_reals(const std::string& csv) {
  std::vector<double> out;
  std::istringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

sg::SelectionModel make_selection(const CommonOpts& o, const sg::SignedGraph& g) {
  auto kind = sg::selection_kind_from_name(o.selection);
  if (kind == sg::SelectionKind::custom) {
    if (o.selection_matrix.empty())
      throw sg::InputError("--selection custom requires --selection-matrix");
    return sg::SelectionModel::custom_from_csv(g, o.selection_matrix);
  }
  return sg::SelectionModel::make(kind, g);
}

sg::UpdateParams make_params(const CommonOpts& o) {
  sg::UpdateParams p;
  p.alpha = o.alpha;
  p.beta = o.beta;
  p.bound = o.bound;
  p.rule = sg::rule_from_name(o.rule);
  auto abc = parse_reals(o.asym);
  if (abc.size() != 3) throw sg::InputError("--asym expects a,b,c");
  p.a = abc[0];
  p.b = abc[1];
  p.c = abc[2];
  return p;
}

json manifest_json(const CommonOpts& o) {
  return json{{"version", kVersion},
              {"graph", o.graph_path},
              {"selection", o.selection},
              {"selection_matrix", o.selection_matrix},
              {"rule", o.rule},
              {"alpha", o.alpha},
              {"beta", o.beta},
              {"asym", o.asym},
              {"bound", o.bound},
              {"x0", o.x0},
              {"horizon", o.horizon},
              {"record_every", o.record_every},
              {"seed", o.seed},
              {"trials", o.trials},
              {"out", o.out}};
}

void write_manifest(const CommonOpts& o, const json& extra = json::object()) {
  if (o.out.empty()) return;
  json m = manifest_json(o);
  for (auto& [k, v] : extra.items()) m[k] = v;
  std::ofstream f(o.out + ".manifest.json");
  f << m.dump(2) << '\n';
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw sg::InputError("cannot write output: " + out_path);
    f << text;
  }
}

int cmd_balance(const CommonOpts& o) {
  auto g = sg::load_graph(o.graph_path);
  auto verdict = sg::check_balance(g);
  json j;
  j["strong"] = verdict.strong.partition
                    ? json{(*verdict.strong.partition)[0],
                           (*verdict.strong.partition)[1]}
                    : json(nullptr);
  j["weak"] = verdict.weak.partition ? json(*verdict.weak.partition)
                                     : json(nullptr);
  if (!verdict.strong.partition || !verdict.weak.partition) {
    j["witness"] = !verdict.strong.partition ? verdict.strong.witness_cycle
                                             : verdict.weak.witness_cycle;
  }
  emit(j.dump(2) + "\n", o.out);
  return 0;
}

int cmd_analyze(const CommonOpts& o, bool require_connected) {
  auto g = sg::load_graph(o.graph_path);
  auto sel = make_selection(o, g);
  sg::SpectralModel model(g, sel);
  if (require_connected && !model.positive_connected()) {
    std::cerr << "positive subgraph is disconnected\n";
    return 3;
  }
  auto report = sg::analyze(model, o.alpha, o.beta);
  emit(sg::report_to_json(report), o.out);
  write_manifest(o);
  return 0;
}

int cmd_simulate(const CommonOpts& o) {
  auto g = sg::load_graph(o.graph_path);
  auto sel = make_selection(o, g);
  auto params = make_params(o);
  params.validate();
  sg::RngStream rng = sg::RngStream::substream(o.seed, 0);
  std::vector<double> x0;
  if (!o.x0.empty()) {
    x0 = parse_reals(o.x0);
  } else {
    x0.resize(g.order());
    for (double& v : x0) v = rng.next_uniform(-params.bound, params.bound);
  }
  sg::SimulateOptions opt;
  opt.horizon = o.horizon;
  opt.record_every =
      o.record_every > 0 ? o.record_every : std::max<long long>(1, o.horizon / 200);
  opt.snapshots = true;
  auto stats = sg::simulate(g, sel, params, x0, opt, rng);
  std::string out = o.out.empty() ? "trajectory.csv" : o.out;
  sg::write_trajectory_csv(stats, g.order(), out);
  CommonOpts om = o;
  om.out = out;
  write_manifest(om, json{{"stop_k", stats.stop_k},
                          {"events", stats.events},
                          {"final_spread", stats.final_spread}});
  std::cout << json{{"events", stats.events},
                    {"final_spread", stats.final_spread},
                    {"stop",
                     stats.stop == sg::StopReason::converged  ? "converged"
                     : stats.stop == sg::StopReason::diverged ? "diverged"
                                                              : "none"},
                    {"out", out}}
                   .dump(2)
            << '\n';
  return 0;
}

sg::TrialConfig make_trial_config(const CommonOpts& o, const sg::SignedGraph& g,
                                  const sg::SelectionModel& sel,
                                  const sg::UpdateParams& params,
                                  std::vector<double>& x0_storage) {
  sg::TrialConfig c;
  c.graph = &g;
  c.selection = &sel;
  c.params = params;
  if (!o.x0.empty()) {
    x0_storage = parse_reals(o.x0);
    c.x0 = x0_storage;
  }
  c.horizon = o.horizon;
  c.record_every = o.record_every;
  return c;
}

int cmd_montecarlo(const CommonOpts& o, const std::string& check,
                   bool no_survivor) {
  auto g = sg::load_graph(o.graph_path);
  auto sel = make_selection(o, g);
  auto params = make_params(o);
  std::vector<double> x0_storage;
  auto config = make_trial_config(o, g, sel, params, x0_storage);
  auto outcomes = sg::run_trials(config, o.trials, o.seed);
  json counts = json::object();
  for (const auto& oc : outcomes) {
    std::string k = sg::outcome_name(oc.cls);
    counts[k] = counts.value(k, 0) + 1;
  }
  json j{{"trials", o.trials}, {"counts", counts}};
  if (no_survivor) {
    auto rep = sg::no_survivor_check(outcomes);
    j["no_survivor"] = {{"diverged_trials", rep.diverged_trials},
                        {"passing", rep.passing},
                        {"fraction", rep.fraction}};
  }
  if (check == "oscillation") {
    auto rep = sg::oscillation_check(outcomes);
    j["oscillation"] = {{"fraction", rep.fraction}};
  } else if (check == "clustering-strong" || check == "clustering-weak") {
    bool strong = check == "clustering-strong";
    std::vector<std::vector<int>> partition;
    if (strong) {
      auto v = sg::check_strong_balance(g);
      if (!v.partition)
        throw sg::PreconditionError("graph is not strongly balanced");
      partition = {(*v.partition)[0], (*v.partition)[1]};
    } else {
      auto v = sg::check_weak_balance(g);
      if (!v.partition)
        throw sg::PreconditionError("graph is not weakly balanced");
      partition = *v.partition;
    }
    auto rep = sg::clustering_check(outcomes, partition, strong);
    j["clustering"] = {{"clustered_trials", rep.clustered_trials},
                       {"group_consistent", rep.group_consistent},
                       {"opposite_boundary", rep.opposite_boundary},
                       {"consistent_fraction", rep.consistent_fraction}};
  }
  emit(j.dump(2) + "\n", o.out);
  write_manifest(o);
  return 0;
}

int cmd_sweep(const CommonOpts& o, const std::string& grid_spec) {
  auto g = sg::load_graph(o.graph_path);
  auto sel = make_selection(o, g);
  auto params = make_params(o);
  sg::SpectralModel model(g, sel);
  std::vector<double> grid = parse_reals(grid_spec);
  if (grid.empty()) throw sg::InputError("--beta-grid expects b1,b2,...");
  std::vector<double> x0_storage;
  auto config = make_trial_config(o, g, sel, params, x0_storage);
  auto result = sg::sweep_beta(config, model, grid, o.trials, o.seed);
  std::string out = o.out.empty() ? "sweep.csv" : o.out;
  sg::write_sweep_csv(result, out);
  CommonOpts om = o;
  om.out = out;
  write_manifest(om, json{{"beta_grid", grid}});
  std::cout << "wrote " << out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed-graph gossip opinion dynamics toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  bool require_connected = false;
  std::string grid_spec;
  std::string check;
  bool no_survivor = false;

  auto* balance = app.add_subcommand("balance", "structural balance verdict");
  balance->add_option("--graph", o.graph_path)->required();
  balance->add_option("--out", o.out);

  auto* analyze = app.add_subcommand("analyze", "spectral thresholds report");
  add_common(analyze, o, false);
  analyze->add_flag("--require-connected", require_connected,
                    "exit 3 when the positive subgraph is disconnected");

  auto* simulate = app.add_subcommand("simulate", "single trajectory CSV");
  add_common(simulate, o, true);

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo beta sweep CSV");
  add_common(sweep, o, true);
  sweep->add_option("--beta-grid", grid_spec, "b1,b2,... ascending")
      ->required();

  auto* mc = app.add_subcommand("montecarlo", "trial classification summary");
  add_common(mc, o, true);
  mc->add_option("--check", check,
                 "oscillation|clustering-strong|clustering-weak");
  mc->add_flag("--no-survivor", no_survivor, "run the no-survivor check");

  auto* hyper = app.add_subcommand("hypercube", "finite-time consensus tools");
  hyper->require_subcommand(1);
  int cube_m = 2;
  std::string sched_path;
  int sched_n = 0;
  double cube_alpha = 0.5;
  std::string cube_graph;
  auto* gen = hyper->add_subcommand("gen", "generate a hypercube schedule");
  gen->add_option("-m,--dimension", cube_m)->required();
  gen->add_option("--out", sched_path);
  auto* verify = hyper->add_subcommand("verify", "verify a schedule file");
  verify->add_option("--schedule", sched_path)->required();
  verify->add_option("-n,--order", sched_n)->required();
  verify->add_option("--alpha", cube_alpha);
  auto* checkcmd =
      hyper->add_subcommand("check", "finite-time consensus prerequisites");
  checkcmd->add_option("--graph", cube_graph)->required();
  checkcmd->add_option("--alpha", cube_alpha);

  CLI11_PARSE(app, argc, argv);

  try {
    if (balance->parsed()) return cmd_balance(o);
    if (analyze->parsed()) {
      apply_config(analyze, o);
      return cmd_analyze(o, require_connected);
    }
    if (simulate->parsed()) {
      apply_config(simulate, o);
      return cmd_simulate(o);
    }
    if (sweep->parsed()) {
      apply_config(sweep, o);
      return cmd_sweep(o, grid_spec);
    }
    if (mc->parsed()) {
      apply_config(mc, o);
      return cmd_montecarlo(o, check, no_survivor);
    }
    if (hyper->parsed()) {
      if (gen->parsed()) {
        auto s = sg::hypercube_schedule(cube_m);
        if (sched_path.empty()) {
          for (auto [u, v] : s.pairs) std::cout << u << ' ' << v << '\n';
        } else {
          sg::save_schedule(s, sched_path);
          std::cout << "wrote " << sched_path << " (" << s.pairs.size()
                    << " pairs)\n";
        }
        return 0;
      }
      if (verify->parsed()) {
        auto s = sg::load_schedule(sched_path, sched_n);
        auto res = sg::verify_schedule(s, sched_n, cube_alpha);
        std::cout << json{{"pass", res.pass}, {"residual", res.residual}}.dump()
                  << '\n';
        return res.pass ? 0 : 4;
      }
      if (checkcmd->parsed()) {
        auto g = sg::load_graph(cube_graph);
        auto res = sg::finite_time_necessary_checks(g, cube_alpha);
        std::cout << json{{"alpha_is_half", res.alpha_is_half},
                          {"power_of_two", res.power_of_two},
                          {"has_matching", res.has_matching},
                          {"all_hold", res.all_hold}}
                         .dump()
                  << '\n';
        return 0;
      }
    }
  } catch (const sg::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const sg::PreconditionError& e) {
    std::cerr << "precondition violation: " << e.what() << '\n';
    return 3;
  } catch (const sg::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
