#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcnot/csv.hpp"

#include <random>

using namespace rcnot;

TEST_CASE("format_real uses 12 significant digits") {
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(0.840896415253714) == "0.840896415254");
  CHECK(format_real(-1e-13) == "-1e-13");
  CHECK(format_real(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("sweep CSV layout") {
  const std::vector<FidelityRecord> recs{
      {Strategy::Uncorrected, 0.5, 0.9, 0.9, 1},
      {Strategy::Comp1, 0.5, 0.99, 0.99, 1},
      {Strategy::Uncorrected, -0.5, 0.8, 0.8, 1},
  };
  CHECK(format_sweep_csv(recs) ==
        "strategy,delta,fidelity\n"
        "comp1,0.5,0.99\n"
        "uncorrected,-0.5,0.8\n"
        "uncorrected,0.5,0.9\n");
}

TEST_CASE("random CSV layout") {
  const std::vector<FidelityRecord> recs{
      {Strategy::Comp2, 1.0, 0.95, 0.8, 1000},
      {Strategy::Uncorrected, 0.0, 1.0, 1.0, 1000},
  };
  CHECK(format_random_csv(recs) ==
        "strategy,r_over_j,n_samples,mean_fidelity,min_fidelity\n"
        "comp2,1,1000,0.95,0.8\n"
        "uncorrected,0,1000,1,1\n");
}

TEST_CASE("convergence CSV layout") {
  CHECK(format_convergence_csv({{10, 0.25}, {40, 1e-3}}) == "k,error\n10,0.25\n40,0.001\n");
}

TEST_CASE("CSV round trip") {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> s(0, 3), n(1, 5000);
  std::vector<FidelityRecord> sweep, random;
  for (int i = 0; i < 60; ++i) {
    const auto strategy = static_cast<Strategy>(s(gen));
    const double x = std::stod(format_real(u(gen) * 2 - 1));
    const double f = std::stod(format_real(u(gen)));
    sweep.push_back({strategy, x, f, f, 1});
    const double lo = std::stod(format_real(f * u(gen)));
    random.push_back({strategy, std::stod(format_real(u(gen))), f, lo, n(gen)});
  }
  const auto sorted = [](std::vector<FidelityRecord> v) {
    std::stable_sort(v.begin(), v.end(), [](const FidelityRecord& a, const FidelityRecord& b) {
      if (a.strategy != b.strategy) return to_string(a.strategy) < to_string(b.strategy);
      return a.x < b.x;
    });
    return v;
  };
  CHECK(parse_sweep_csv(format_sweep_csv(sweep)) == sorted(sweep));
  CHECK(parse_random_csv(format_random_csv(random)) == sorted(random));
  CHECK(format_sweep_csv(parse_sweep_csv(format_sweep_csv(sweep))) == format_sweep_csv(sweep));
}

TEST_CASE("CSV parse errors") {
  CHECK_THROWS_AS(parse_sweep_csv("strategy,x,fidelity\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sweep_csv("strategy,delta,fidelity\nbogus,0,1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sweep_csv("strategy,delta,fidelity\ncomp1,0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_random_csv("strategy,r_over_j,n_samples,mean_fidelity,min_fidelity\ncomp2,0,x,1,1\n"),
                  std::invalid_argument);
  CHECK(parse_sweep_csv("strategy,delta,fidelity\n").empty());
}
