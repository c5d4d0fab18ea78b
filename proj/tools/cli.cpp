#include "cli.hpp"

#include "rcnot/csv.hpp"
#include "rcnot/experiments.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rcnot::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// key=value lines become "--key value" tokens; "true" values become bare flags.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot read config file '{}'", path));
  std::vector<std::string> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(fmt::format("{}:{}: expected key=value", path, line_no));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError(fmt::format("{}:{}: empty key", path, line_no));
    tokens.push_back("--" + key);
    if (value != "true") tokens.push_back(value);
  }
  return tokens;
}

// Pulls "--config FILE" / "--config=FILE" out of args and splices the file's
// settings in right after the subcommand name, so explicit flags (which come
// later) take precedence.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config") {
      if (std::next(it) == args.end()) throw UsageError("--config requires a file name");
      path = *std::next(it);
      it = args.erase(it, std::next(it, 2));
    } else if (it->starts_with("--config=")) {
      path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (path.empty()) return args;
  const auto settings = read_config(path);
  const auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) { return !a.starts_with("-"); });
  if (sub == args.end()) throw UsageError("--config needs a subcommand");
  args.insert(std::next(sub), settings.begin(), settings.end());
  return args;
}

std::vector<Strategy> strategies_or_usage(const std::string& text) {
  try {
    return parse_strategy_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<double> grid_or_usage(double lo, double hi, double step, std::string_view what) {
  try {
    return make_grid(lo, hi, step);
  } catch (const std::invalid_argument& e) {
    throw UsageError(fmt::format("{} grid: {}", what, e.what()));
  }
}

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError(fmt::format("bad k value '{}'", item));
    }
    if (used != item.size() || k < 1) throw UsageError(fmt::format("k values must be integers >= 1, got '{}'", item));
    ks.push_back(k);
  }
  if (ks.empty()) throw UsageError("--k-list is empty");
  return ks;
}

struct SweepArgs {
  double theta = std::numbers::pi / 2;
  double delta_min = -1.0, delta_max = 1.0, delta_step = 0.01;
  std::string strategies = "uncorrected,comp1,comp2,comp3";
};

struct RandomArgs {
  int samples = 1000;
  std::uint64_t seed = 1;
  int k = 20;
  double rj_min = 0.0, rj_max = 1.0, rj_step = 0.1;
  double j = 1.0;
  std::string strategies = "uncorrected,comp2";
  unsigned threads = 1;
};

struct ConvergenceArgs {
  std::string k_list;
  std::string hamiltonian = "heisenberg";
  double t = 0.5;
  double j = 1.0;
  double r = 1.0;
  std::uint64_t seed = 1;
};

struct TimingArgs {
  TimingModel tm;
};

struct ExportArgs {
  std::string strategy;
  double theta = std::numbers::pi / 2;
  double delta = 0.0;
  std::uint64_t seed = 1;
  double r = 0.0;
  int k = 20;
  double j = 1.0;
  bool cnot = false;
};

std::string do_sweep(const SweepArgs& a) {
  DeltaSweepConfig cfg;
  cfg.theta = a.theta;
  cfg.strategies = strategies_or_usage(a.strategies);
  cfg.delta_grid = grid_or_usage(a.delta_min, a.delta_max, a.delta_step, "delta");
  return format_sweep_csv(run_delta_sweep(cfg));
}

std::string do_random(const RandomArgs& a) {
  if (a.samples < 1) throw UsageError("--samples must be >= 1");
  if (a.k < 1) throw UsageError("--k must be >= 1");
  if (!(a.j > 0.0)) throw UsageError("--j must be positive");
  if (a.rj_min < 0.0) throw UsageError("--rj-min must be >= 0");
  MonteCarloConfig cfg;
  cfg.samples_per_point = a.samples;
  cfg.master_seed = a.seed;
  cfg.isolation_k = a.k;
  cfg.j_base = a.j;
  cfg.threads = a.threads;
  cfg.strategies = strategies_or_usage(a.strategies);
  cfg.r_over_j_grid = grid_or_usage(a.rj_min, a.rj_max, a.rj_step, "R/J");
  return format_random_csv(run_monte_carlo(cfg));
}

std::string do_convergence(const ConvergenceArgs& a) {
  const auto ks = parse_k_list(a.k_list);
  if (!(a.t >= 0.0)) throw UsageError("--t must be >= 0");
  PauliCoeffs coeffs;
  if (a.hamiltonian == "heisenberg") {
    coeffs = heisenberg(a.j);
  } else if (a.hamiltonian == "zz") {
    coeffs = ising_zz(a.j);
  } else if (a.hamiltonian == "random") {
    if (!(a.j > 0.0) || a.r < 0.0) throw UsageError("random Hamiltonian needs --j > 0 and --r >= 0");
    coeffs = random_hamiltonian({a.j, a.r, a.seed});
  } else {
    throw UsageError(fmt::format("unknown Hamiltonian '{}' (valid: heisenberg, random, zz)", a.hamiltonian));
  }
  return format_convergence_csv(run_isolation_convergence(ks, coeffs, a.t));
}

std::string do_timing(const TimingArgs& a) {
  try {
    a.tm.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const TimingReport r = run_timing_report(a.tm);
  std::string out;
  out += fmt::format("timing model: single-qubit pi {} ns, hadamard {} ns, two-qubit pi/8 {} ns\n",
                     format_real(a.tm.single_qubit_ns_per_pi), format_real(a.tm.hadamard_ns),
                     format_real(a.tm.two_qubit_ns_per_pi_over_8));
  out += fmt::format("naive sqrt-swap CNOT: {} single-qubit gates, {} two-qubit gates, {} ns\n",
                     r.naive_counts.single_qubit, r.naive_counts.two_qubit, format_real(r.naive_ns));
  out += fmt::format("composite comp2 CNOT: {} single-qubit gates, {} two-qubit gates, {} ns\n",
                     r.comp_counts.single_qubit, r.comp_counts.two_qubit, format_real(r.comp_ns));
  out += fmt::format("composite/naive duration ratio: {}\n", format_real(r.comp_ns / r.naive_ns));
  out += fmt::format("composite CNOTs in 60 ms: {}\n", r.ops_in_60ms);
  return out;
}

std::string do_export(const ExportArgs& a, bool random_mode, bool delta_given) {
  if (a.strategy.empty()) throw UsageError("--strategy is required");
  if (random_mode && delta_given) throw UsageError("--delta cannot be combined with --seed/--r");
  if (!(a.j > 0.0)) throw UsageError("--j must be positive");
  if (a.k < 1) throw UsageError("--k must be >= 1");

  Calibration cal = Calibration::abstract_delta(a.delta, a.j);
  if (random_mode) {
    if (a.r < 0.0) throw UsageError("--r must be >= 0");
    cal = Calibration::full(random_hamiltonian({a.j, a.r, a.seed}), a.k, a.j);
  }

  PulseSequence seq;
  if (a.strategy == "sqrt-swap") {
    seq = sqrt_swap_cnot(cal);
  } else {
    const Strategy s = strategies_or_usage(a.strategy).front();
    if (a.strategy.find(',') != std::string::npos) throw UsageError("--strategy takes a single name");
    try {
      seq = entangler(s, a.theta, cal);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    if (a.cnot) seq = cnot_assembly(seq);
  }
  return serialize(seq);
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust composite CNOT construction and fidelity experiments", "rcnot"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string out_path;
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Fidelity of the assembled CNOT versus coupling error delta");
  sweep_cmd->add_option("--theta", sweep.theta, "Entangling angle (default pi/2)");
  sweep_cmd->add_option("--delta-min", sweep.delta_min);
  sweep_cmd->add_option("--delta-max", sweep.delta_max);
  sweep_cmd->add_option("--delta-step", sweep.delta_step);
  sweep_cmd->add_option("--strategies", sweep.strategies, "Comma list of uncorrected, comp1, comp2, comp3");
  add_out(sweep_cmd);

  RandomArgs random;
  auto* random_cmd = app.add_subcommand("random", "Monte Carlo over random Hamiltonians");
  random_cmd->add_option("--samples", random.samples, "Random Hamiltonians per R/J point");
  random_cmd->add_option("--seed", random.seed, "Master seed");
  random_cmd->add_option("--k", random.k, "Term-isolation repetitions");
  random_cmd->add_option("--rj-min", random.rj_min);
  random_cmd->add_option("--rj-max", random.rj_max);
  random_cmd->add_option("--rj-step", random.rj_step);
  random_cmd->add_option("--j", random.j, "Heisenberg coupling J (also J_P)");
  random_cmd->add_option("--strategies", random.strategies, "Comma list; uncorrected is sqrt-swap");
  random_cmd->add_option("--threads", random.threads, "Worker threads (0 = all cores)");
  add_out(random_cmd);

  ConvergenceArgs conv;
  auto* conv_cmd = app.add_subcommand("convergence", "Term-isolation error versus repetition count k");
  conv_cmd->add_option("--k-list", conv.k_list, "Comma list of k values")->required();
  conv_cmd->add_option("--hamiltonian", conv.hamiltonian, "heisenberg, random or zz");
  conv_cmd->add_option("--t", conv.t, "Evolution time");
  conv_cmd->add_option("--j", conv.j, "Coupling strength");
  conv_cmd->add_option("--r", conv.r, "Random amplitude (random Hamiltonian)");
  conv_cmd->add_option("--seed", conv.seed, "Seed (random Hamiltonian)");
  add_out(conv_cmd);

  TimingArgs timing;
  auto* timing_cmd = app.add_subcommand("timing", "Gate counts and durations of naive and composite CNOTs");
  timing_cmd->add_option("--single-pi-ns", timing.tm.single_qubit_ns_per_pi);
  timing_cmd->add_option("--hadamard-ns", timing.tm.hadamard_ns);
  timing_cmd->add_option("--two-pi8-ns", timing.tm.two_qubit_ns_per_pi_over_8);
  add_out(timing_cmd);

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "Print a pulse sequence");
  export_cmd->add_option("--strategy", exp.strategy, "uncorrected, comp1, comp2, comp3 or sqrt-swap");
  export_cmd->add_option("--theta", exp.theta);
  auto* delta_opt = export_cmd->add_option("--delta", exp.delta, "Coupling error (abstract model)");
  auto* seed_opt = export_cmd->add_option("--seed", exp.seed, "Random Hamiltonian seed");
  auto* r_opt = export_cmd->add_option("--r", exp.r, "Random Hamiltonian amplitude");
  export_cmd->add_option("--k", exp.k, "Term-isolation repetitions (random mode)");
  export_cmd->add_option("--j", exp.j, "Predicted coupling J_P");
  export_cmd->add_flag("--cnot", exp.cnot, "Wrap the entangler into a CNOT");
  add_out(export_cmd);

  std::string text;
  try {
    auto args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (sweep_cmd->parsed()) text = do_sweep(sweep);
    else if (random_cmd->parsed()) text = do_random(random);
    else if (conv_cmd->parsed()) text = do_convergence(conv);
    else if (timing_cmd->parsed()) text = do_timing(timing);
    else if (export_cmd->parsed())
      text = do_export(exp, seed_opt->count() > 0 || r_opt->count() > 0, delta_opt->count() > 0);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rcnot: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "rcnot: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rcnot: " << e.what() << "\n";
    return kExitFailure;
  }

  if (out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "rcnot: cannot write '" << out_path << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace rcnot::cli
