#include "rcnot/csv.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace rcnot {
namespace {

void sort_records(std::vector<FidelityRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const FidelityRecord& a, const FidelityRecord& b) {
    const auto na = to_string(a.strategy);
    const auto nb = to_string(b.strategy);
    if (na != nb) return na < nb;
    return a.x < b.x;
  });
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument(fmt::format("bad number '{}' in CSV", text));
  return v;
}

// Calls `row(fields)` for every non-empty line after a header equal to `header`.
template <typename Row>
void for_each_row(std::string_view text, std::string_view header, std::size_t n_fields, Row&& row) {
  bool seen_header = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != header) throw std::invalid_argument(fmt::format("expected CSV header '{}'", header));
      seen_header = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != n_fields) throw std::invalid_argument(fmt::format("malformed CSV row '{}'", line));
    row(fields);
  }
  if (!seen_header) throw std::invalid_argument("CSV has no header");
}

constexpr std::string_view kSweepHeader = "strategy,delta,fidelity";
constexpr std::string_view kRandomHeader = "strategy,r_over_j,n_samples,mean_fidelity,min_fidelity";

}  // namespace

std::string format_real(double v) { return fmt::format("{:.12g}", v); }

std::string format_sweep_csv(std::vector<FidelityRecord> records) {
  sort_records(records);
  std::string out = fmt::format("{}\n", kSweepHeader);
  for (const auto& r : records)
    out += fmt::format("{},{},{}\n", to_string(r.strategy), format_real(r.x), format_real(r.mean_f));
  return out;
}

std::string format_random_csv(std::vector<FidelityRecord> records) {
  sort_records(records);
  std::string out = fmt::format("{}\n", kRandomHeader);
  for (const auto& r : records)
    out += fmt::format("{},{},{},{},{}\n", to_string(r.strategy), format_real(r.x), r.n, format_real(r.mean_f),
                       format_real(r.min_f));
  return out;
}

std::string format_convergence_csv(const std::vector<ConvergencePoint>& points) {
  std::string out = "k,error\n";
  for (const auto& p : points) out += fmt::format("{},{}\n", p.k, format_real(p.error));
  return out;
}

std::vector<FidelityRecord> parse_sweep_csv(std::string_view text) {
  std::vector<FidelityRecord> out;
  for_each_row(text, kSweepHeader, 3, [&](const std::vector<std::string_view>& f) {
    const double fid = parse_number<double>(f[2]);
    out.push_back({parse_strategy(f[0]), parse_number<double>(f[1]), fid, fid, 1});
  });
  return out;
}

std::vector<FidelityRecord> parse_random_csv(std::string_view text) {
  std::vector<FidelityRecord> out;
  for_each_row(text, kRandomHeader, 5, [&](const std::vector<std::string_view>& f) {
    out.push_back({parse_strategy(f[0]), parse_number<double>(f[1]), parse_number<double>(f[3]),
                   parse_number<double>(f[4]), parse_number<int>(f[2])});
  });
  return out;
}

}  // namespace rcnot
