#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "nbwalk/evolve.hpp"
#include "nbwalk/graph.hpp"
#include "nbwalk/montecarlo.hpp"
#include "nbwalk/nbtheory.hpp"
#include "nbwalk/spectra.hpp"

namespace nbwalk {

// The composition behind the `rates` command: spectrum (dense when it fits,
// power-iteration estimate above the dense limit), lambda_star, and the
// closed-form rates for both walks.
struct RatesReport {
  int n = 0;
  int d = 0;
  double lambda = 0.0;
  bool lambda_estimated = false;  // true when the power-iteration path ran
  double rho_simple = 0.0;
  double rho_nb = 0.0;
  double ratio = 0.0;
  double trace_bound = 0.0;
  bool connected = false;
  bool bipartite = false;
  std::optional<std::string> warning;
  Spectrum spectrum;  // empty when lambda_estimated
};

RatesReport rates_report(const RegularGraph& g, const JacobiOptions& opt = {});

// Report JSON shapes. Deterministic key order; the generated_at stamp is the
// only field that varies between identical runs.
nlohmann::ordered_json rates_json(const RatesReport& r);
nlohmann::ordered_json mixing_json(const MixingReport& rep, double lambda,
                                   double theory_rate, std::uint64_t seed);
nlohmann::ordered_json load_json(const LoadReport& rep);

std::string timestamp_utc();

}  // namespace nbwalk
