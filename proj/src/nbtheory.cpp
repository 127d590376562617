#include "nbwalk/nbtheory.hpp"

#include <cmath>
#include <limits>

namespace nbwalk {

double chebyshev_u(int k, double x) {
  if (k < -1) {
    throw NbTheoryError(NbTheoryError::Kind::BadArgument,
                        "chebyshev_u needs k >= -1");
  }
  if (k == -1) return 0.0;
  double prev = 0.0;  // U_{-1}
  double cur = 1.0;   // U_0
  for (int i = 0; i < k; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double nb_count_poly(int k, double x, int d) {
  if (k < 1 || d < 2) {
    throw NbTheoryError(NbTheoryError::Kind::BadArgument,
                        "nb_count_poly needs k >= 1 and d >= 2");
  }
  const double dd = d;
  // one recurrence pass gives both U_k and U_{k-2}
  double prev = 0.0;
  double cur = 1.0;
  double back2 = 0.0;  // U_{k-2} once the loop finishes
  for (int i = 0; i < k; ++i) {
    back2 = prev;
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return std::sqrt((dd - 1.0) / dd) * cur - back2 / std::sqrt(dd * (dd - 1.0));
}

double chebyshev_growth(double x) {
  if (x < 0.0) {
    throw NbTheoryError(NbTheoryError::Kind::BadArgument,
                        "growth factor defined for x >= 0 only");
  }
  // treat float noise straddling the branch point as exactly 1
  if (x <= 1.0 || std::abs(x - 1.0) <= 1e-12) return 1.0;
  return x + std::sqrt(x * x - 1.0);
}

RatePair mixing_rates(double lambda, int d) {
  if (d < 3) {
    throw NbTheoryError(NbTheoryError::Kind::BadArgument,
                        "mixing rates need d >= 3");
  }
  if (lambda < 0.0 || lambda > d + 1e-9) {
    throw NbTheoryError(NbTheoryError::Kind::BadArgument,
                        "lambda must lie in [0, d], got " +
                            std::to_string(lambda));
  }
  lambda = std::min(lambda, static_cast<double>(d));
  RatePair r;
  r.lambda = lambda;
  r.degree = d;
  r.rho_simple = lambda / d;
  r.rho_nb =
      chebyshev_growth(lambda / (2.0 * std::sqrt(d - 1.0))) / std::sqrt(d - 1.0);
  r.ratio = r.rho_simple > 0.0 ? r.rho_nb / r.rho_simple
                               : std::numeric_limits<double>::quiet_NaN();
  return r;
}

NbCountMatrix::Count NbCountMatrix::total_per_row() const {
  Count total = d_;
  for (int i = 1; i < k_; ++i) total *= d_ - 1;
  return total;
}

Eigen::MatrixXd NbCountMatrix::to_double() const {
  Eigen::MatrixXd m(n_, n_);
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v = 0; v < n_; ++v) {
      m(u, v) = static_cast<double>(at(u, v));
    }
  }
  return m;
}

NbCountMatrix nb_count_matrix(const RegularGraph& g, int walk_length) {
  if (walk_length < 1) {
    throw NbTheoryError(NbTheoryError::Kind::BadArgument,
                        "walk length must be >= 1");
  }
  const int n = g.n();
  const int d = g.degree();
  // the largest intermediate is bounded by d * d(d-1)^(k-1); keep it inside
  // the signed 128-bit range with margin
  const double bits =
      2.0 * std::log2(static_cast<double>(d)) +
      (walk_length - 1) * std::log2(static_cast<double>(std::max(d - 1, 1)));
  if (bits > 126.0) {
    throw NbTheoryError(NbTheoryError::Kind::OverflowRisk,
                        "counts for k=" + std::to_string(walk_length) +
                            " at d=" + std::to_string(d) +
                            " would overflow 128-bit integers");
  }

  NbCountMatrix cur(n, 1, d);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.neighbors(u)) cur.at(u, w) = 1;
  }
  if (walk_length == 1) return cur;

  // C_2 = A^2 - d I
  NbCountMatrix next(n, 2, d);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.neighbors(u)) {
      for (VertexId v : g.neighbors(w)) next.at(u, v) += 1;
    }
    next.at(u, u) -= d;
  }
  if (walk_length == 2) return next;

  NbCountMatrix prev = std::move(cur);
  NbCountMatrix now = std::move(next);
  for (int k = 3; k <= walk_length; ++k) {
    NbCountMatrix out(n, k, d);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId w : g.neighbors(u)) {
        for (VertexId v = 0; v < n; ++v) {
          out.at(u, v) += now.at(w, v);
        }
      }
      for (VertexId v = 0; v < n; ++v) {
        out.at(u, v) -= static_cast<NbCountMatrix::Count>(d - 1) * prev.at(u, v);
      }
    }
    prev = std::move(now);
    now = std::move(out);
  }
  return now;
}

double nb_second_eigenvalue(const Spectrum& s, int d, int walk_length) {
  if (walk_length < 1 || s.n() < 2) {
    throw NbTheoryError(NbTheoryError::Kind::BadArgument,
                        "need k >= 1 and at least 2 eigenvalues");
  }
  const double half_band = 2.0 * std::sqrt(d - 1.0);
  const double scale =
      std::sqrt(d * std::pow(static_cast<double>(d - 1), walk_length - 1));
  double best = 0.0;
  // skip exactly one copy of the top eigenvalue; for disconnected graphs the
  // second copy of d stays in and the result is 1
  for (int i = 1; i < s.n(); ++i) {
    best = std::max(
        best, std::abs(nb_count_poly(walk_length, s.values[i] / half_band, d)));
  }
  return best / scale;
}

std::vector<RateCurveRow> rate_curve(int d, std::span<const double> grid) {
  if (d < 3) {
    throw NbTheoryError(NbTheoryError::Kind::BadArgument,
                        "rate curve needs d >= 3");
  }
  std::vector<RateCurveRow> rows;
  rows.reserve(grid.size());
  for (double lambda : grid) {
    const RatePair r = mixing_rates(lambda, d);
    rows.push_back({r.lambda, r.rho_simple, r.rho_nb});
  }
  return rows;
}

}  // namespace nbwalk
