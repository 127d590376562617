#include "nbwalk/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "nbwalk/rng.hpp"

namespace nbwalk {

namespace {

// streams inside one seed: 1 = simple walk, 2 = nb walk, 3 = balls-and-bins
constexpr std::uint64_t stream_for(WalkKind kind) {
  return kind == WalkKind::kSimple ? 1 : 2;
}

}  // namespace

WalkTrace simulate_walk(const RegularGraph& g, WalkKind kind, VertexId start,
                        int steps, std::uint64_t seed) {
  if (start < 0 || start >= g.n()) {
    throw MonteCarloError(MonteCarloError::Kind::BadArgument,
                          "start vertex out of range");
  }
  if (steps < 1) {
    throw MonteCarloError(MonteCarloError::Kind::BadArgument,
                          "steps must be >= 1");
  }
  const int d = g.degree();
  if (kind == WalkKind::kNonBacktracking && d < 3) {
    throw MonteCarloError(MonteCarloError::Kind::DegreeTooSmall,
                          "non-backtracking sampling needs d >= 3");
  }

  WalkTrace trace;
  trace.kind = kind;
  trace.seed = seed;
  trace.start = start;
  trace.vertices.reserve(steps + 1);
  trace.vertices.push_back(start);

  CounterRng rng(seed, stream_for(kind));
  VertexId cur = start;
  if (kind == WalkKind::kSimple) {
    for (int t = 0; t < steps; ++t) {
      cur = g.neighbors(cur)[rng.below(d)];
      trace.vertices.push_back(cur);
    }
  } else {
    // first step has no edge to avoid
    VertexId prev = cur;
    cur = g.neighbors(cur)[rng.below(d)];
    trace.vertices.push_back(cur);
    for (int t = 1; t < steps; ++t) {
      const int prev_slot = *g.slot_of(cur, prev);
      // index remap: a draw in 0..d-2 addresses the d-1 allowed slots
      int slot = static_cast<int>(rng.below(d - 1));
      if (slot >= prev_slot) ++slot;
      prev = cur;
      cur = g.neighbors(cur)[slot];
      trace.vertices.push_back(cur);
    }
  }
  return trace;
}

std::vector<int> visit_histogram(const WalkTrace& trace, int n) {
  std::vector<int> counts(n, 0);
  for (VertexId v : trace.vertices) {
    if (v < 0 || v >= n) {
      throw MonteCarloError(MonteCarloError::Kind::BadArgument,
                            "trace vertex out of range");
    }
    ++counts[v];
  }
  return counts;
}

int max_load(const WalkTrace& trace, int n) {
  const auto counts = visit_histogram(trace, n);
  return max_count(counts);
}

int max_count(std::span<const int> counts) {
  int best = 0;
  for (int c : counts) best = std::max(best, c);
  return best;
}

std::vector<int> balls_and_bins(int bins, int balls, std::uint64_t seed) {
  if (bins < 1 || balls < 1) {
    throw MonteCarloError(MonteCarloError::Kind::BadArgument,
                          "need positive bin and ball counts");
  }
  CounterRng rng(seed, 3);
  std::vector<int> counts(bins, 0);
  for (int i = 0; i < balls; ++i) {
    ++counts[rng.below(static_cast<std::uint64_t>(bins))];
  }
  return counts;
}

LoadSummary summarize_loads(std::span<const int> loads) {
  LoadSummary s;
  if (loads.empty()) return s;
  std::vector<int> sorted(loads.begin(), loads.end());
  std::sort(sorted.begin(), sorted.end());
  const auto at_quantile = [&](double q) {
    // midpoint convention for even counts
    const double pos = q * (sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - lo;
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
  };
  s.median = at_quantile(0.5);
  s.quartile1 = at_quantile(0.25);
  s.quartile3 = at_quantile(0.75);
  s.min = sorted.front();
  s.max = sorted.back();
  return s;
}

LoadReport load_experiment(const RegularGraph& g, int steps, int trials,
                           std::uint64_t base_seed) {
  if (trials < 0) {
    throw MonteCarloError(MonteCarloError::Kind::BadArgument,
                          "trials must be >= 0");
  }
  LoadReport rep;
  rep.n = g.n();
  rep.d = g.degree();
  rep.steps = steps;
  rep.trials = trials;
  rep.base_seed = base_seed;
  if (trials == 0) return rep;

  std::vector<int> nb_loads, simple_loads, bins_loads;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(t);
    const int nb_max =
        max_load(simulate_walk(g, WalkKind::kNonBacktracking, 0, steps, seed),
                 g.n());
    const int simple_max =
        max_load(simulate_walk(g, WalkKind::kSimple, 0, steps, seed), g.n());
    const int bins_max = max_count(balls_and_bins(g.n(), steps + 1, seed));
    rep.rows.push_back({t, nb_max, simple_max, bins_max});
    nb_loads.push_back(nb_max);
    simple_loads.push_back(simple_max);
    bins_loads.push_back(bins_max);
  }
  rep.nb = summarize_loads(nb_loads);
  rep.simple = summarize_loads(simple_loads);
  rep.bins = summarize_loads(bins_loads);
  return rep;
}

int self_intersection_time(const WalkTrace& trace) {
  std::unordered_set<VertexId> seen;
  for (std::size_t i = 0; i < trace.vertices.size(); ++i) {
    if (!seen.insert(trace.vertices[i]).second) return static_cast<int>(i);
  }
  return trace.steps() + 1;
}

CycleTrapStats cycle_trap_frequency(const DecoratedExpander& dec, int loops,
                                    int trials, std::uint64_t seed) {
  const RegularGraph& g = dec.graph;
  const int n = g.n();
  const int glen = dec.cycle_length;
  const int seg = loops * glen;
  if (loops < 1 || trials < 1) {
    throw MonteCarloError(MonteCarloError::Kind::BadArgument,
                          "need loops >= 1 and trials >= 1");
  }
  if (seg > n) {
    throw MonteCarloError(MonteCarloError::Kind::BadArgument,
                          "segment longer than the walk");
  }

  CycleTrapStats stats;
  stats.loops = loops;
  stats.trials = trials;
  stats.predicted_freq = std::pow(g.degree() - 1.0, -seg);

  for (int t = 0; t < trials; ++t) {
    const WalkTrace trace = simulate_walk(g, WalkKind::kNonBacktracking, 0, n,
                                          seed + static_cast<std::uint64_t>(t));
    int hits = 0;
    // segment 0 starts before the walk has a predecessor edge, so its first
    // step is a 1/d choice instead of 1/(d-1); skip it to keep the per
    // segment probability exact
    for (int base = seg; base + seg <= n; base += seg) {
      const VertexId v = trace.vertices[base];
      const VertexId prev = trace.vertices[base - 1];
      // designated direction: continue an arrival along the cycle, else the
      // ring "+1" orientation; either way the next designated vertex is
      // never the predecessor, so each step is a fresh 1/(d-1) event
      const bool arrived_backward = prev == dec.cycle_next(v);
      VertexId expect = v;
      bool trapped = true;
      for (int s = 1; s <= seg; ++s) {
        expect = arrived_backward ? dec.cycle_prev(expect) : dec.cycle_next(expect);
        if (trace.vertices[base + s] != expect) {
          trapped = false;
          break;
        }
      }
      ++stats.segments;
      if (trapped) ++hits;
    }
    stats.trapped_segments += hits;
    if (hits > 0) ++stats.trials_with_trap;
    stats.traps_per_trial.push_back(hits);
    stats.nb_max_load_per_trial.push_back(max_load(trace, n));
  }

  const long long per_trial = stats.segments / trials;
  stats.observed_freq =
      stats.segments > 0
          ? static_cast<double>(stats.trapped_segments) / stats.segments
          : 0.0;
  stats.predicted_trial_hit =
      1.0 - std::pow(1.0 - stats.predicted_freq, static_cast<double>(per_trial));
  return stats;
}

}  // namespace nbwalk
