#include "nbwalk/reports.hpp"

#include <ctime>

namespace nbwalk {

RatesReport rates_report(const RegularGraph& g, const JacobiOptions& opt) {
  RatesReport r;
  r.n = g.n();
  r.d = g.degree();
  r.connected = is_connected(g);
  r.bipartite = is_bipartite(g);
  r.trace_bound = trace_lower_bound(g.n(), g.degree());

  if (g.n() <= opt.dense_limit) {
    r.spectrum = adjacency_spectrum(g, opt);
    r.lambda = lambda_star(r.spectrum);
  } else {
    r.lambda = lambda_estimate(g);
    r.lambda_estimated = true;
  }

  const RatePair rates = mixing_rates(r.lambda, g.degree());
  r.rho_simple = rates.rho_simple;
  r.rho_nb = rates.rho_nb;
  r.ratio = rates.ratio;

  std::string warn;
  if (!r.connected) {
    warn = "graph is disconnected; walks never mix and lambda equals d";
  } else if (r.bipartite) {
    warn = "graph is bipartite; deviations oscillate and do not vanish";
  }
  if (!warn.empty()) r.warning = warn;
  return r;
}

nlohmann::ordered_json rates_json(const RatesReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["lambda"] = r.lambda;
  j["lambda_estimated"] = r.lambda_estimated;
  j["rho"] = r.rho_simple;
  j["rho_nb"] = r.rho_nb;
  j["ratio"] = r.ratio;
  j["trace_bound"] = r.trace_bound;
  j["connected"] = r.connected;
  j["bipartite"] = r.bipartite;
  if (r.warning) j["warning"] = *r.warning;
  j["generated_at"] = timestamp_utc();
  return j;
}

nlohmann::ordered_json mixing_json(const MixingReport& rep, double lambda,
                                   double theory_rate, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["walk"] = walk_name(rep.walk);
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["lambda"] = lambda;
  j["fitted_rate"] = rep.fitted_rate;
  j["theory_rate"] = theory_rate;
  j["tau"] = rep.tau;
  j["threshold"] = rep.threshold;
  j["horizon"] = rep.horizon;
  j["sampled_starts"] = rep.sampled_starts;
  j["seed"] = seed;
  j["deviations"] = rep.deviations;
  j["generated_at"] = timestamp_utc();
  return j;
}

nlohmann::ordered_json load_json(const LoadReport& rep) {
  const auto summary = [](const LoadSummary& s) {
    nlohmann::ordered_json j;
    j["median"] = s.median;
    j["quartile1"] = s.quartile1;
    j["quartile3"] = s.quartile3;
    j["min"] = s.min;
    j["max"] = s.max;
    return j;
  };
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["steps"] = rep.steps;
  j["trials"] = rep.trials;
  j["seed"] = rep.base_seed;
  j["nb"] = summary(rep.nb);
  j["simple"] = summary(rep.simple);
  j["bins"] = summary(rep.bins);
  j["generated_at"] = timestamp_utc();
  return j;
}

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace nbwalk
