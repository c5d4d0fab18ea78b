// Fidelity studies: delta sweeps, random-Hamiltonian Monte Carlo, isolation
// convergence and the gate-time report.

#ifndef RCNOT_EXPERIMENTS_HPP
#define RCNOT_EXPERIMENTS_HPP

#include "rcnot/gates.hpp"

#include <cstdint>
#include <numbers>
#include <vector>

namespace rcnot {

struct FidelityRecord {
  Strategy strategy = Strategy::Uncorrected;
  double x = 0.0;  // delta, or R/J
  double mean_f = 0.0;
  double min_f = 0.0;
  int n = 0;
  friend bool operator==(const FidelityRecord&, const FidelityRecord&) = default;
};

/// Inclusive grid lo, lo + step, ..., hi. Throws std::invalid_argument on a
/// non-positive step, hi < lo or non-finite input.
std::vector<double> make_grid(double lo, double hi, double step);

struct DeltaSweepConfig {
  double theta = std::numbers::pi / 2;
  std::vector<double> delta_grid = make_grid(-1.0, 1.0, 0.01);
  std::vector<Strategy> strategies{std::begin(kAllStrategies), std::end(kAllStrategies)};
};

/// Records ordered by grid index, then by strategy as listed in the config.
/// Each record has n = 1 and mean_f == min_f.
std::vector<FidelityRecord> run_delta_sweep(const DeltaSweepConfig& cfg);

/// Fidelity of the assembled CNOT for one strategy under the abstract delta
/// error model.
double sweep_point(Strategy s, double theta, double delta);

struct MonteCarloConfig {
  std::vector<double> r_over_j_grid = make_grid(0.0, 1.0, 0.1);
  int samples_per_point = 1000;
  int isolation_k = 20;
  std::uint64_t master_seed = 1;
  double j_base = 1.0;
  std::vector<Strategy> strategies{Strategy::Uncorrected, Strategy::Comp2};
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// For each R/J and strategy, mean and minimum CNOT fidelity over
/// `samples_per_point` random Hamiltonians. Uncorrected is the
/// square-root-of-swap CNOT; every other strategy is its composite pulse with
/// Q_k term isolation, timed with J_P = j_base. Sample i at grid point g draws
/// from derive_seed(master_seed, g, i), so results do not depend on thread
/// count or scheduling.
std::vector<FidelityRecord> run_monte_carlo(const MonteCarloConfig& cfg);

/// CNOT fidelity of one strategy against one fixed ambient Hamiltonian.
double random_point(Strategy s, const PauliCoeffs& coeffs, int isolation_k, double j_predicted);

struct ConvergencePoint {
  int k = 0;
  double error = 0.0;
};

/// phase_distance(compile(Q_k(t)), exp(i J_ZZ t ZZ)) for each k.
std::vector<ConvergencePoint> run_isolation_convergence(const std::vector<int>& k_list,
                                                        const PauliCoeffs& coeffs, double t);

struct TimingReport {
  GateCounts naive_counts;
  GateCounts comp_counts;
  double naive_ns = 0.0;
  double comp_ns = 0.0;
  long long ops_in_60ms = 0;
};

/// Naive: square-root-of-swap CNOT. Composite: comp2 CNOT. Both at J_P = 1.
TimingReport run_timing_report(const TimingModel& tm);

}  // namespace rcnot

#endif  // RCNOT_EXPERIMENTS_HPP
