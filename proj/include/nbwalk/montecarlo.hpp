#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbwalk/evolve.hpp"
#include "nbwalk/graph.hpp"

namespace nbwalk {

class MonteCarloError : public std::runtime_error {
 public:
  enum class Kind { DegreeTooSmall, BadArgument };

  MonteCarloError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Vertex sequence of one sampled trajectory; vertices.size() == steps + 1.
struct WalkTrace {
  WalkKind kind = WalkKind::kSimple;
  std::uint64_t seed = 0;
  VertexId start = 0;
  std::vector<VertexId> vertices;
  int steps() const { return static_cast<int>(vertices.size()) - 1; }
};

// Samples one walk. Streams: the simple walk draws from stream 1 of the
// seed and the non-backtracking walk from stream 2, so the two kinds are
// independent even under the same seed. steps >= 1; the non-backtracking
// walk needs d >= 3.
WalkTrace simulate_walk(const RegularGraph& g, WalkKind kind, VertexId start,
                        int steps, std::uint64_t seed);

// Visits per vertex over the whole trace (start included).
std::vector<int> visit_histogram(const WalkTrace& trace, int n);

// Largest visit count of any vertex. A zero-step trace has max load 1.
int max_load(const WalkTrace& trace, int n);

// balls i.i.d. uniform over bins; returns per-bin counts. Uses stream 3.
std::vector<int> balls_and_bins(int bins, int balls, std::uint64_t seed);

int max_count(std::span<const int> counts);

struct LoadSummary {
  double median = 0.0;
  double quartile1 = 0.0;
  double quartile3 = 0.0;
  int min = 0;
  int max = 0;
};
LoadSummary summarize_loads(std::span<const int> loads);

// Paired comparison: per trial, max load of a non-backtracking walk, of a
// simple walk, and of the same number of uniform balls in n bins. Trial t
// uses seed base_seed + t (walk kinds split by stream inside simulate_walk),
// so adding trials never changes earlier rows. All walks start at vertex 0;
// a walk of `steps` steps occupies steps + 1 positions, and the bins column
// throws the same steps + 1 balls.
struct LoadReport {
  int n = 0;
  int d = 0;
  int steps = 0;
  int trials = 0;
  std::uint64_t base_seed = 0;

  struct Row {
    int trial;
    int nb_max;
    int simple_max;
    int bins_max;
  };
  std::vector<Row> rows;
  LoadSummary nb, simple, bins;
};
LoadReport load_experiment(const RegularGraph& g, int steps, int trials,
                           std::uint64_t base_seed);

// First position index that repeats an earlier vertex; steps + 1 (one past
// the trace) when all positions are distinct.
int self_intersection_time(const WalkTrace& trace);

// Frequency of full cycle-circling events on a decorated graph: cut each
// non-backtracking trajectory into segments of loops * g steps; a segment
// scores when the walk, started on its cycle, follows that cycle in its
// designated direction for the whole segment. The designated direction
// continues the arrival edge when the walk arrived along the cycle and is
// the ring "+1" direction otherwise, so the event needs loops * g
// consecutive forced choices and has probability (d-1)^(-loops*g) exactly.
struct CycleTrapStats {
  int loops = 0;
  int trials = 0;
  long long segments = 0;
  long long trapped_segments = 0;
  int trials_with_trap = 0;
  double observed_freq = 0.0;        // trapped_segments / segments
  double predicted_freq = 0.0;       // (d-1)^(-loops*g)
  double predicted_trial_hit = 0.0;  // 1 - (1 - p)^(segments per trial)
  std::vector<int> traps_per_trial;
  std::vector<int> nb_max_load_per_trial;
};
CycleTrapStats cycle_trap_frequency(const DecoratedExpander& dec, int loops,
                                    int trials, std::uint64_t seed);

}  // namespace nbwalk
