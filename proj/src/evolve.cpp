#include "nbwalk/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "nbwalk/rng.hpp"

namespace nbwalk {

const char* walk_name(WalkKind kind) {
  return kind == WalkKind::kSimple ? "simple" : "nb";
}

VertexDistribution delta_distribution(const RegularGraph& g, VertexId v) {
  if (v < 0 || v >= g.n()) {
    throw EvolveError(EvolveError::Kind::BadArgument,
                      "start vertex out of range");
  }
  VertexDistribution out{Eigen::VectorXd::Zero(g.n())};
  out.p[v] = 1.0;
  return out;
}

VertexDistribution uniform_distribution(const RegularGraph& g) {
  return {Eigen::VectorXd::Constant(g.n(), 1.0 / g.n())};
}

VertexDistribution simple_step(const RegularGraph& g,
                               const VertexDistribution& in) {
  const int n = g.n();
  const double inv_d = 1.0 / g.degree();
  VertexDistribution out{Eigen::VectorXd::Zero(n)};
  for (VertexId v = 0; v < n; ++v) {
    const double send = in.p[v] * inv_d;
    if (send == 0.0) continue;
    for (VertexId w : g.neighbors(v)) out.p[w] += send;
  }
  out.p = out.p.cwiseMax(0.0);
  return out;
}

EdgeDistribution nb_initial(const RegularGraph& g, VertexId start) {
  if (g.degree() < 3) {
    throw EvolveError(EvolveError::Kind::DegreeTooSmall,
                      "non-backtracking evolution needs d >= 3");
  }
  if (start < 0 || start >= g.n()) {
    throw EvolveError(EvolveError::Kind::BadArgument,
                      "start vertex out of range");
  }
  EdgeDistribution out{Eigen::VectorXd::Zero(g.num_directed_edges())};
  const double inv_d = 1.0 / g.degree();
  for (int slot = 0; slot < g.degree(); ++slot) {
    out.p[g.edge_id(start, slot)] = inv_d;
  }
  return out;
}

std::vector<int> reverse_edge_table(const RegularGraph& g) {
  std::vector<int> rev(g.num_directed_edges());
  for (int e = 0; e < g.num_directed_edges(); ++e) rev[e] = g.reverse_edge(e);
  return rev;
}

EdgeDistribution nb_step(const RegularGraph& g, const EdgeDistribution& in,
                         std::span<const int> reverse) {
  if (g.degree() < 3) {
    throw EvolveError(EvolveError::Kind::DegreeTooSmall,
                      "non-backtracking evolution needs d >= 3");
  }
  const int n = g.n();
  const int d = g.degree();
  // mass arriving at each head vertex; the out-edge (v, w) then gets
  // (arrived(v) - mass on (w, v)) / (d - 1), which drops only the reversal
  Eigen::VectorXd arrived = Eigen::VectorXd::Zero(n);
  for (int e = 0; e < g.num_directed_edges(); ++e) {
    arrived[g.edge_head(e)] += in.p[e];
  }
  EdgeDistribution out{Eigen::VectorXd(g.num_directed_edges())};
  const double inv = 1.0 / (d - 1);
  for (int e = 0; e < g.num_directed_edges(); ++e) {
    out.p[e] = (arrived[e / d] - in.p[reverse[e]]) * inv;
  }
  out.p = out.p.cwiseMax(0.0);
  return out;
}

EdgeDistribution nb_step(const RegularGraph& g, const EdgeDistribution& in) {
  return nb_step(g, in, reverse_edge_table(g));
}

VertexDistribution project_to_vertices(const RegularGraph& g,
                                       const EdgeDistribution& in) {
  VertexDistribution out{Eigen::VectorXd::Zero(g.n())};
  for (int e = 0; e < g.num_directed_edges(); ++e) {
    out.p[g.edge_head(e)] += in.p[e];
  }
  return out;
}

double deviation_linf(const VertexDistribution& d) {
  const double uniform = 1.0 / static_cast<double>(d.p.size());
  return (d.p.array() - uniform).abs().maxCoeff();
}

double deviation_tv(const VertexDistribution& d) {
  const double uniform = 1.0 / static_cast<double>(d.p.size());
  return 0.5 * (d.p.array() - uniform).abs().sum();
}

namespace {

constexpr double kNoiseFloor = 1e-13;

// Least-squares slope of log(dev) over the last half of the usable range,
// fitted separately at even and odd k. Near-bipartite inputs oscillate with
// period 2, so a single fit would see a sawtooth; the slower parity carries
// the true decay.
double regress_log_slope(const std::vector<double>& dev,
                         const std::vector<int>& ks) {
  if (ks.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k : ks) {
    const double y = std::log(dev[k]);
    sx += k;
    sy += y;
    sxx += static_cast<double>(k) * k;
    sxy += k * y;
  }
  const double m = static_cast<double>(ks.size());
  const double denom = m * sxx - sx * sx;
  if (denom <= 0) return std::numeric_limits<double>::quiet_NaN();
  return (m * sxy - sx * sy) / denom;
}

double fit_decay_rate(const std::vector<double>& dev) {
  const int horizon = static_cast<int>(dev.size()) - 1;
  int kmax = -1;
  for (int k = 1; k <= horizon; ++k) {
    if (dev[k] >= kNoiseFloor) kmax = k;
  }
  if (kmax < 2) return -1.0;
  const int kmin = std::max(1, kmax / 2);

  // The deviation profile can carry a bounded oscillation on top of the
  // geometric decay (complex or negative spectrum below the tree threshold).
  // The local maxima of the tail track the decay envelope much more closely
  // than a blind least-squares fit, so prefer regressing through them.
  std::vector<int> peaks;
  for (int k = kmin; k <= kmax; ++k) {
    if (dev[k] < kNoiseFloor) continue;
    const bool left_ok = (k - 1 < 1) || dev[k] >= dev[k - 1];
    const bool right_ok = (k + 1 > horizon) || dev[k] >= dev[k + 1];
    if (left_ok && right_ok) peaks.push_back(k);
  }
  if (peaks.size() >= 3 && peaks.back() - peaks.front() >= 4) {
    const double slope = regress_log_slope(dev, peaks);
    if (std::isfinite(slope)) return std::exp(slope);
  }

  // Smooth or strictly alternating profiles: fit each parity class and keep
  // the slower decay so a vanishing parity cannot fake a fast rate.
  double best = -1.0;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<int> ks;
    for (int k = kmin; k <= kmax; ++k) {
      if (k % 2 == parity && dev[k] >= kNoiseFloor) ks.push_back(k);
    }
    const double slope = regress_log_slope(dev, ks);
    if (std::isfinite(slope)) best = std::max(best, std::exp(slope));
  }
  return best;
}

}  // namespace

MixingReport mixing_report(const RegularGraph& g, WalkKind walk, int horizon,
                           double threshold, int sampled_starts,
                           std::uint64_t seed) {
  if (horizon < 1) {
    throw EvolveError(EvolveError::Kind::BadArgument, "horizon must be >= 1");
  }
  if (!(threshold > 0.0)) {
    throw EvolveError(EvolveError::Kind::BadArgument,
                      "threshold must be positive");
  }
  const int n = g.n();
  if (walk == WalkKind::kNonBacktracking && g.degree() < 3) {
    throw EvolveError(EvolveError::Kind::DegreeTooSmall,
                      "non-backtracking evolution needs d >= 3");
  }
  if (sampled_starts < 0 || sampled_starts > n) {
    throw EvolveError(EvolveError::Kind::BadArgument,
                      "sampled starts must lie in 0..n");
  }

  std::vector<VertexId> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  if (sampled_starts > 0 && sampled_starts < n) {
    CounterRng rng(seed, 11);
    for (int i = 0; i < sampled_starts; ++i) {
      const int j = i + static_cast<int>(rng.below(n - i));
      std::swap(starts[i], starts[j]);
    }
    starts.resize(sampled_starts);
    std::sort(starts.begin(), starts.end());
  }

  MixingReport rep;
  rep.walk = walk;
  rep.n = n;
  rep.d = g.degree();
  rep.horizon = horizon;
  rep.threshold = threshold;
  rep.sampled_starts = static_cast<int>(starts.size()) == n
                           ? 0
                           : static_cast<int>(starts.size());
  rep.deviations.assign(horizon + 1, 0.0);

  const std::vector<int> reverse =
      walk == WalkKind::kNonBacktracking ? reverse_edge_table(g)
                                         : std::vector<int>{};

  for (VertexId start : starts) {
    if (walk == WalkKind::kSimple) {
      VertexDistribution p = delta_distribution(g, start);
      rep.deviations[0] = std::max(rep.deviations[0], deviation_linf(p));
      for (int k = 1; k <= horizon; ++k) {
        p = simple_step(g, p);
        rep.deviations[k] = std::max(rep.deviations[k], deviation_linf(p));
      }
    } else {
      rep.deviations[0] = std::max(rep.deviations[0],
                                   deviation_linf(delta_distribution(g, start)));
      EdgeDistribution e = nb_initial(g, start);
      rep.deviations[1] =
          std::max(rep.deviations[1], deviation_linf(project_to_vertices(g, e)));
      for (int k = 2; k <= horizon; ++k) {
        e = nb_step(g, e, reverse);
        rep.deviations[k] =
            std::max(rep.deviations[k], deviation_linf(project_to_vertices(g, e)));
      }
    }
  }

  // tau certifies "stays under the threshold from here to the horizon"
  int tau = 0;
  for (int k = horizon; k >= 0; --k) {
    if (rep.deviations[k] > threshold) {
      tau = k + 1;
      break;
    }
  }
  if (tau > horizon) {
    throw EvolveError(EvolveError::Kind::HorizonTooShort,
                      "deviation still " +
                          std::to_string(rep.deviations[horizon]) +
                          " at the horizon, above threshold " +
                          std::to_string(threshold));
  }
  rep.tau = tau;

  rep.fitted_rate = fit_decay_rate(rep.deviations);
  if (rep.fitted_rate < 0.0) {
    throw EvolveError(EvolveError::Kind::HorizonTooShort,
                      "too few decaying points to fit a rate");
  }
  return rep;
}

DeviationBounds nb_deviation_bounds(const RegularGraph& g, int walk_length,
                                    const Spectrum* spectrum) {
  const NbCountMatrix counts = nb_count_matrix(g, walk_length);
  const double total = static_cast<double>(counts.total_per_row());
  const double uniform = 1.0 / g.n();

  DeviationBounds b;
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v = 0; v < g.n(); ++v) {
      const double dev =
          std::abs(static_cast<double>(counts.at(u, v)) / total - uniform);
      b.observed = std::max(b.observed, dev);
    }
  }

  Spectrum local;
  if (!spectrum) {
    local = adjacency_spectrum(g);
    spectrum = &local;
  }
  const double mu = nb_second_eigenvalue(*spectrum, g.degree(), walk_length);
  b.lower = mu / g.n();
  b.upper = mu;

  const double slack = 1e-9 * std::max(1.0, b.upper);
  if (b.lower > b.observed + slack || b.observed > b.upper + slack) {
    throw std::logic_error("deviation bounds violated: " +
                           std::to_string(b.lower) + " <= " +
                           std::to_string(b.observed) + " <= " +
                           std::to_string(b.upper) + " fails");
  }
  return b;
}

}  // namespace nbwalk
