// A pocket-size threshold sweep: n = 512, p on a geometric grid around
// n^(-1/11), 60 trials per cell, CSV on stdout. The full-size version of this
// lives behind `schurlab experiment`.

#include <iostream>

#include "schurlab/lab.hpp"

int main() {
  schurlab::ExperimentConfig cfg;
  cfg.n_values = {512};
  cfg.p_mode = schurlab::ExperimentConfig::PMode::power;
  cfg.p_exp_num = -1;
  cfg.p_exp_den = 11;
  cfg.p_factors = {0.35, 0.5, 0.71, 1.0, 1.41, 2.0, 2.83};
  cfg.r = 2;
  cfg.trials = 60;
  cfg.seed = 2024;
  cfg.method = schurlab::ExperimentConfig::Method::both;
  cfg.budget = 500'000;

  auto report = schurlab::run_threshold_experiment(cfg, 2, &std::cerr);
  schurlab::write_report_csv(report, std::cout);

  for (const auto& est : schurlab::estimate_crossing(report)) {
    if (est.ok)
      std::cerr << "n=" << est.n << ": frequency crosses 1/2 near p=" << est.p_cross
                << "\n";
    else
      std::cerr << "n=" << est.n << ": no crossing estimate (" << est.reason << ")\n";
  }
  return 0;
}
