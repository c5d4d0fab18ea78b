// CSV schemas for experiment outputs. Reals are written with 12 significant
// digits; rows are sorted by strategy name, then by x.
//
//   sweep:       strategy,delta,fidelity
//   random:      strategy,r_over_j,n_samples,mean_fidelity,min_fidelity
//   convergence: k,error

#ifndef RCNOT_CSV_HPP
#define RCNOT_CSV_HPP

#include "rcnot/experiments.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rcnot {

std::string format_real(double v);

std::string format_sweep_csv(std::vector<FidelityRecord> records);
std::string format_random_csv(std::vector<FidelityRecord> records);
std::string format_convergence_csv(const std::vector<ConvergencePoint>& points);

/// Inverse of the formatters above. Throw std::invalid_argument on a bad
/// header or malformed row.
std::vector<FidelityRecord> parse_sweep_csv(std::string_view text);
std::vector<FidelityRecord> parse_random_csv(std::string_view text);

}  // namespace rcnot

#endif  // RCNOT_CSV_HPP
