#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

namespace oracle {

namespace {

void count_walks(const RegularGraph& g, VertexId start, VertexId cur,
                 VertexId prev, int remaining, long long* row) {
  if (remaining == 0) {
    ++row[cur];
    return;
  }
  for (VertexId w : g.neighbors(cur)) {
    if (w != prev) count_walks(g, start, w, cur, remaining - 1, row);
  }
}

}  // namespace

std::vector<long long> enumerate_nb_walk_counts(const RegularGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int n = g.n();
  std::vector<long long> counts(static_cast<std::size_t>(n) * n, 0);
  for (VertexId s = 0; s < n; ++s) {
    count_walks(g, s, s, -1, k, counts.data() + static_cast<std::size_t>(s) * n);
  }
  return counts;
}

std::vector<std::vector<int>> all_pairs_distances(const RegularGraph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> dist(n);
  for (VertexId s = 0; s < n; ++s) {
    dist[s].assign(n, -1);
    std::deque<VertexId> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(u)) {
        if (dist[s][w] == -1) {
          dist[s][w] = dist[s][u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

namespace {

void cycle_search(const RegularGraph& g, VertexId root, VertexId cur,
                  std::vector<char>& on_path, int len, int& best) {
  for (VertexId w : g.neighbors(cur)) {
    if (w == root && len >= 2) {
      best = std::min(best, len + 1);
    } else if (w > root && !on_path[w] && len + 2 < best) {
      on_path[w] = 1;
      cycle_search(g, root, w, on_path, len + 1, best);
      on_path[w] = 0;
    }
  }
}

}  // namespace

int brute_girth(const RegularGraph& g) {
  int best = g.n() + 1;
  std::vector<char> on_path(g.n(), 0);
  for (VertexId root = 0; root < g.n(); ++root) {
    on_path[root] = 1;
    cycle_search(g, root, root, on_path, 0, best);
    on_path[root] = 0;
    if (best == 3) break;
  }
  if (best > g.n()) throw std::logic_error("no cycle found in a regular graph");
  return best;
}

namespace {

using Poly = std::vector<long long>;  // ascending powers

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<long long> char_poly(const RegularGraph& g) {
  const int n = g.n();
  if (n > 8) throw std::invalid_argument("char_poly oracle limited to n <= 8");

  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) a[v][w] = 1;
  }

  Poly total(n + 1, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // entry (i, perm[i]) of xI - A: {x} on the diagonal, -a off it
    Poly term{1};
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      if (perm[i] == i) {
        term = poly_mul(term, Poly{0, 1});
      } else if (a[i][perm[i]] != 0) {
        term = poly_mul(term, Poly{-a[i][perm[i]]});
      } else {
        zero = true;
      }
    }
    if (zero) continue;
    const int sign = permutation_sign(perm);
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += sign * term[i];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

long double eval_poly(const std::vector<long double>& c, long double x) {
  long double v = 0.0L;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::vector<double> real_roots_impl(const std::vector<long double>& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1 || c[deg] == 0.0L) throw std::invalid_argument("bad polynomial");
  if (deg == 1) return {static_cast<double>(-c[0] / c[1])};

  std::vector<long double> deriv(deg);
  for (int i = 1; i <= deg; ++i) deriv[i - 1] = c[i] * i;
  std::vector<double> extrema = real_roots_impl(deriv);
  std::sort(extrema.begin(), extrema.end());

  long double maxc = 0.0L;
  for (int i = 0; i < deg; ++i) maxc = std::max(maxc, std::abs(c[i]));
  const double bound = 2.0 + static_cast<double>(maxc / std::abs(c[deg]));

  // cluster near-equal extrema and keep multiplicities
  std::vector<std::pair<double, int>> reps;
  const double cluster_tol = 1e-7 * std::max(1.0, bound);
  for (double r : extrema) {
    if (!reps.empty() && std::abs(r - reps.back().first) <= cluster_tol) {
      ++reps.back().second;
    } else {
      reps.push_back({r, 1});
    }
  }

  const auto p_small = [&](long double x) {
    long double scale = 0.0L;
    long double xp = 1.0L;
    for (int i = 0; i <= deg; ++i) {
      scale += std::abs(c[i]) * std::max(1.0L, std::abs(xp));
      xp *= x;
    }
    return std::abs(eval_poly(c, x)) <= 1e-9L * scale;
  };

  std::vector<double> roots;
  std::vector<bool> rep_is_root(reps.size(), false);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (p_small(reps[i].first)) {
      rep_is_root[i] = true;
      roots.insert(roots.end(), reps[i].second + 1, reps[i].first);
    }
  }

  std::vector<double> points{-bound};
  std::vector<bool> point_is_root{false};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    points.push_back(reps[i].first);
    point_is_root.push_back(rep_is_root[i]);
  }
  points.push_back(bound);
  point_is_root.push_back(false);

  const double delta = 1e-6 * std::max(1.0, bound);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    // p is strictly monotone between consecutive extrema, so an interval
    // whose endpoint already holds a root has no further root inside; skip
    // it rather than trusting the sign of a cancellation-noise evaluation
    // right next to a multiple root.
    if (point_is_root[i] || point_is_root[i + 1]) continue;
    double lo = points[i] + (i == 0 ? 0.0 : delta);
    double hi = points[i + 1] - (i + 2 == points.size() ? 0.0 : delta);
    if (lo >= hi) continue;
    long double flo = eval_poly(c, lo);
    long double fhi = eval_poly(c, hi);
    if (flo == 0.0L) {
      roots.push_back(lo);
      continue;
    }
    if (fhi == 0.0L) continue;  // right endpoint belongs to the next pass
    if ((flo < 0) == (fhi < 0)) continue;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const long double fm = eval_poly(c, mid);
      if (fm == 0.0L) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }

  if (static_cast<int>(roots.size()) != deg) {
    throw std::logic_error("root isolation lost a root: found " +
                           std::to_string(roots.size()) + " of " +
                           std::to_string(deg));
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

}  // namespace

std::vector<double> real_roots(const std::vector<long long>& coeffs) {
  std::vector<long double> c(coeffs.begin(), coeffs.end());
  return real_roots_impl(c);
}

long double log_abs_nb_poly(int k, long double x, int d) {
  if (k < 1 || d < 2) throw std::invalid_argument("need k >= 1, d >= 2");
  long double shift = 0.0L;  // accumulated log of the common scale factor
  long double prev = 0.0L;   // U_{-1}
  long double cur = 1.0L;    // U_0
  long double back2 = 0.0L;
  for (int i = 0; i < k; ++i) {
    back2 = prev;
    const long double next = 2.0L * x * cur - prev;
    prev = cur;
    cur = next;
    const long double mag = std::max(std::abs(cur), std::abs(prev));
    if (mag > 1e200L) {
      // all three live values share one basis, so scale them together
      cur /= 1e200L;
      prev /= 1e200L;
      back2 /= 1e200L;
      shift += std::log(1e200L);
    }
  }
  const long double dd = d;
  const long double q = std::sqrt((dd - 1.0L) / dd) * cur -
                        back2 / std::sqrt(dd * (dd - 1.0L));
  return std::log(std::abs(q)) + shift;
}

int bins_median_mt19937(int n, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> maxima;
  for (int t = 0; t < trials; ++t) {
    std::vector<int> bins(n, 0);
    int best = 0;
    for (int b = 0; b < n; ++b) {
      best = std::max(best, ++bins[pick(rng)]);
    }
    maxima.push_back(best);
  }
  std::sort(maxima.begin(), maxima.end());
  return maxima[maxima.size() / 2];
}

}  // namespace oracle
