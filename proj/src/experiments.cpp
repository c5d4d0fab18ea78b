#include "rcnot/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace rcnot {
namespace {

constexpr double kPi = std::numbers::pi;

double cnot_fidelity(const PulseSequence& seq, const HermitianPropagator<double>& prop) {
  static const Unitary4c target = cnot();
  return fidelity(compile(seq, prop), target);
}

// Sequences depend on the calibration's J_P and k but not on the ambient
// coefficients, so one build serves every sample.
PulseSequence monte_carlo_sequence(Strategy s, int isolation_k, double j_predicted) {
  const Calibration cal = Calibration::full(PauliCoeffs{}, isolation_k, j_predicted);
  if (s == Strategy::Uncorrected) return sqrt_swap_cnot(cal);
  return cnot_assembly(entangler(s, kPi / 2, cal));
}

}  // namespace

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step))
    throw std::invalid_argument("grid bounds and step must be finite");
  if (hi < lo) throw std::invalid_argument("grid maximum is below minimum");
  if (lo == hi) return {lo};
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  const double span = (hi - lo) / step;
  const auto n = static_cast<long long>(std::floor(span + 1e-9));
  if (n > 10'000'000) throw std::invalid_argument("grid too large");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n) + 1);
  for (long long i = 0; i <= n; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  return grid;
}

double sweep_point(Strategy s, double theta, double delta) {
  const Calibration cal = Calibration::abstract_delta(delta);
  const Unitary4c u = compile(cnot_assembly(entangler(s, theta, cal)), cal.ambient());
  return fidelity(u, assembled_target(theta));
}

std::vector<FidelityRecord> run_delta_sweep(const DeltaSweepConfig& cfg) {
  if (cfg.delta_grid.empty()) throw std::invalid_argument("delta grid is empty");
  if (cfg.strategies.empty()) throw std::invalid_argument("no strategies requested");
  for (double d : cfg.delta_grid)
    if (!std::isfinite(d)) throw std::invalid_argument("delta grid values must be finite");

  std::vector<FidelityRecord> out;
  out.reserve(cfg.delta_grid.size() * cfg.strategies.size());
  for (double delta : cfg.delta_grid) {
    for (Strategy s : cfg.strategies) {
      const double f = sweep_point(s, cfg.theta, delta);
      out.push_back({s, delta, f, f, 1});
    }
  }
  return out;
}

double random_point(Strategy s, const PauliCoeffs& coeffs, int isolation_k, double j_predicted) {
  const PulseSequence seq = monte_carlo_sequence(s, isolation_k, j_predicted);
  return cnot_fidelity(seq, HermitianPropagator<double>(build_hamiltonian(coeffs)));
}

std::vector<FidelityRecord> run_monte_carlo(const MonteCarloConfig& cfg) {
  if (cfg.samples_per_point < 1) throw std::invalid_argument("samples_per_point must be >= 1");
  if (cfg.isolation_k < 1) throw std::invalid_argument("isolation_k must be >= 1");
  if (cfg.r_over_j_grid.empty()) throw std::invalid_argument("R/J grid is empty");
  if (cfg.strategies.empty()) throw std::invalid_argument("no strategies requested");
  if (!(cfg.j_base > 0.0)) throw std::invalid_argument("j_base must be positive");
  for (double rj : cfg.r_over_j_grid)
    if (!std::isfinite(rj) || rj < 0.0) throw std::invalid_argument("R/J values must be finite and >= 0");

  std::vector<PulseSequence> sequences;
  for (Strategy s : cfg.strategies) sequences.push_back(monte_carlo_sequence(s, cfg.isolation_k, cfg.j_base));

  const std::size_t n_grid = cfg.r_over_j_grid.size();
  const std::size_t n_strat = cfg.strategies.size();
  const auto n_samples = static_cast<std::size_t>(cfg.samples_per_point);
  // fidelities[(g * n_samples + i) * n_strat + s]
  std::vector<double> fidelities(n_grid * n_samples * n_strat);

  const auto work = [&](std::size_t task) {
    const std::size_t g = task / n_samples;
    const std::size_t i = task % n_samples;
    const RandomEnsembleSpec spec{cfg.j_base, cfg.r_over_j_grid[g] * cfg.j_base,
                                  derive_seed(cfg.master_seed, g, i)};
    const HermitianPropagator<double> prop(build_hamiltonian(random_hamiltonian(spec)));
    for (std::size_t s = 0; s < n_strat; ++s) fidelities[task * n_strat + s] = cnot_fidelity(sequences[s], prop);
  };

  const std::size_t n_tasks = n_grid * n_samples;
  unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_tasks));
  if (threads <= 1) {
    for (std::size_t t = 0; t < n_tasks; ++t) work(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < n_tasks; t = next++) work(t);
      });
  }

  std::vector<FidelityRecord> out;
  out.reserve(n_grid * n_strat);
  for (std::size_t g = 0; g < n_grid; ++g) {
    for (std::size_t s = 0; s < n_strat; ++s) {
      double sum = 0.0;
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t i = 0; i < n_samples; ++i) {
        const double f = fidelities[(g * n_samples + i) * n_strat + s];
        sum += f;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
      }
      // Summation rounding must not push the mean outside [min, max].
      const double mean = std::clamp(sum / static_cast<double>(n_samples), lo, hi);
      out.push_back({cfg.strategies[s], cfg.r_over_j_grid[g], mean, lo, cfg.samples_per_point});
    }
  }
  return out;
}

std::vector<ConvergencePoint> run_isolation_convergence(const std::vector<int>& k_list,
                                                        const PauliCoeffs& coeffs, double t) {
  if (k_list.empty()) throw std::invalid_argument("k list is empty");
  const HermitianPropagator<double> prop(build_hamiltonian(coeffs));
  const Unitary4c target = zz_rotation(2.0 * coeffs.zz() * t);
  std::vector<ConvergencePoint> out;
  for (int k : k_list) out.push_back({k, phase_distance(compile(isolate_q(t, k), prop), target)});
  return out;
}

TimingReport run_timing_report(const TimingModel& tm) {
  tm.validate();
  const Calibration cal = Calibration::abstract_delta(0.0);
  const PulseSequence naive = sqrt_swap_cnot(cal);
  const PulseSequence comp = cnot_assembly(comp2(kPi / 2, cal));

  TimingReport r;
  r.naive_counts = gate_counts(naive);
  r.comp_counts = gate_counts(comp);
  r.naive_ns = duration(naive, tm, cal.j_predicted);
  r.comp_ns = duration(comp, tm, cal.j_predicted);
  r.ops_in_60ms = static_cast<long long>(std::floor(60e6 / r.comp_ns));
  return r;
}

}  // namespace rcnot
