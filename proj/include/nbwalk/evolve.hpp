#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbwalk/graph.hpp"
#include "nbwalk/nbtheory.hpp"

namespace nbwalk {

class EvolveError : public std::runtime_error {
 public:
  enum class Kind { HorizonTooShort, DegreeTooSmall, BadArgument };

  EvolveError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class WalkKind { kSimple, kNonBacktracking };

const char* walk_name(WalkKind kind);

// Probability vector over vertices. Entries sum to 1 within 1e-12 and tiny
// negative round-off is clamped to zero by the evolution steps.
struct VertexDistribution {
  Eigen::VectorXd p;
};

// Probability vector over directed edges, indexed by RegularGraph edge ids.
struct EdgeDistribution {
  Eigen::VectorXd p;
};

VertexDistribution delta_distribution(const RegularGraph& g, VertexId v);
VertexDistribution uniform_distribution(const RegularGraph& g);

// One step of the simple random walk: out = P^T in with P = A / d.
VertexDistribution simple_step(const RegularGraph& g, const VertexDistribution& in);

// Distribution of the first directed edge of a non-backtracking walk leaving
// start: mass 1/d on each edge (start, w). Requires d >= 3.
EdgeDistribution nb_initial(const RegularGraph& g, VertexId start);

// One non-backtracking transition on directed edges: mass on (u, v) spreads
// evenly over the d-1 edges (v, w), w != u. Requires d >= 3.
EdgeDistribution nb_step(const RegularGraph& g, const EdgeDistribution& in);
// Same, with reverse_edge() precomputed once by the caller (hot loops).
EdgeDistribution nb_step(const RegularGraph& g, const EdgeDistribution& in,
                         std::span<const int> reverse);
std::vector<int> reverse_edge_table(const RegularGraph& g);

// Marginal of the edge distribution on the head vertex: the position of the
// walker after the steps taken so far.
VertexDistribution project_to_vertices(const RegularGraph& g,
                                       const EdgeDistribution& in);

// max_v |p(v) - 1/n| and (1/2) sum_v |p(v) - 1/n|.
double deviation_linf(const VertexDistribution& d);
double deviation_tv(const VertexDistribution& d);

// Worst-start deviation profile of a walk, with a geometric rate fitted to
// the tail and the first time the profile stays under the threshold.
struct MixingReport {
  WalkKind walk = WalkKind::kSimple;
  int n = 0;
  int d = 0;
  int horizon = 0;
  double threshold = 0.0;
  int sampled_starts = 0;            // 0 means every vertex was a start
  std::vector<double> deviations;    // index k = deviation after k steps
  double fitted_rate = 0.0;
  int tau = 0;                       // first k with deviations[j] <= threshold for all j >= k
};

// deviations[k] = max over starts of deviation_linf after k steps. The rate
// is fitted by least squares on log deviations over the last half of the
// usable range (entries above 1e-13): through the local maxima when the tail
// oscillates under a bounded envelope, otherwise per parity with the larger
// fit winning, which tolerates period-2 oscillation on bipartite-ish inputs.
// HorizonTooShort when the profile never settles under the threshold or
// leaves too few points to fit.
MixingReport mixing_report(const RegularGraph& g, WalkKind walk, int horizon,
                           double threshold, int sampled_starts = 0,
                           std::uint64_t seed = 0);

// For one walk length: spectral lower bound, exact worst-pair deviation of
// the length-k walk-count matrix, spectral upper bound. The exact value is
// always within the bounds; violations throw, since they would mean a bug.
struct DeviationBounds {
  double lower = 0.0;     // mu / n
  double observed = 0.0;  // max_{u,v} |C_k(u,v) / (d (d-1)^(k-1)) - 1/n|
  double upper = 0.0;     // mu
};
DeviationBounds nb_deviation_bounds(const RegularGraph& g, int walk_length,
                                    const Spectrum* spectrum = nullptr);

}  // namespace nbwalk
