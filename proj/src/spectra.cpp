#include "nbwalk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "nbwalk/rng.hpp"

namespace nbwalk {

Eigen::MatrixXd adjacency_matrix(const RegularGraph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (VertexId v = 0; v < g.n(); ++v) {
    for (VertexId w : g.neighbors(v)) a(v, w) = 1.0;
  }
  return a;
}

Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a, const JacobiOptions& opt,
                                   Eigen::MatrixXd* vectors) {
  const int n = static_cast<int>(a.rows());
  if (n != a.cols()) {
    throw SpectraError(SpectraError::Kind::BadArgument, "matrix not square");
  }
  if (vectors) *vectors = Eigen::MatrixXd::Identity(n, n);

  const double scale = a.norm();
  if (scale == 0.0 || n == 1) {
    Eigen::VectorXd vals = a.diagonal();
    std::sort(vals.data(), vals.data() + n, std::greater<double>());
    return vals;
  }

  // elements this small cannot push the off-diagonal norm back over the
  // convergence threshold, so rotating them away is wasted work
  const double skip = opt.tol * scale / (10.0 * n);

  bool converged = false;
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    }
    if (std::sqrt(off) <= opt.tol * scale) {
      converged = true;
      break;
    }

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= skip) continue;

        // classic two-sided rotation zeroing a(p,q)
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const double app = a(p, p);
        const double aqq = a(q, q);
        const Eigen::VectorXd ap = a.col(p);
        const Eigen::VectorXd aq = a.col(q);
        a.col(p) = c * ap - s * aq;
        a.col(q) = s * ap + c * aq;
        a.row(p) = a.col(p).transpose();
        a.row(q) = a.col(q).transpose();
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;

        if (vectors) {
          const Eigen::VectorXd vp = vectors->col(p);
          const Eigen::VectorXd vq = vectors->col(q);
          vectors->col(p) = c * vp - s * vq;
          vectors->col(q) = s * vp + c * vq;
        }
      }
    }
  }
  if (!converged) {
    // the loop above checks before each sweep; give the final sweep credit
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    }
    if (std::sqrt(off) > opt.tol * scale) {
      throw SpectraError(SpectraError::Kind::NoConvergence,
                         "off-diagonal norm " + std::to_string(std::sqrt(off)) +
                             " after " + std::to_string(opt.max_sweeps) +
                             " sweeps");
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });
  Eigen::VectorXd vals(n);
  for (int i = 0; i < n; ++i) vals[i] = a(order[i], order[i]);
  if (vectors) {
    Eigen::MatrixXd sorted(n, n);
    for (int i = 0; i < n; ++i) sorted.col(i) = vectors->col(order[i]);
    *vectors = std::move(sorted);
  }
  return vals;
}

Spectrum adjacency_spectrum(const RegularGraph& g, const JacobiOptions& opt) {
  if (g.n() > opt.dense_limit) {
    throw SpectraError(SpectraError::Kind::DenseLimitExceeded,
                       "n=" + std::to_string(g.n()) + " exceeds dense limit " +
                           std::to_string(opt.dense_limit));
  }
  const Eigen::MatrixXd a = adjacency_matrix(g);
  Eigen::MatrixXd vectors;
  Spectrum s;
  s.values = jacobi_eigenvalues(a, opt, &vectors);
  s.residual =
      (a * vectors - vectors * s.values.asDiagonal()).cwiseAbs().maxCoeff();
  return s;
}

double lambda_star(const Spectrum& s) {
  if (s.n() < 2) {
    throw SpectraError(SpectraError::Kind::BadArgument,
                       "need at least 2 eigenvalues");
  }
  return std::max(s.values[1], std::abs(s.values[s.n() - 1]));
}

double trace_lower_bound(int n, int d) {
  if (n <= d || d < 1) {
    throw SpectraError(SpectraError::Kind::BadArgument,
                       "trace bound needs n > d >= 1");
  }
  return std::sqrt(static_cast<double>(d) * (n - d) / (n - 1.0));
}

SanityReport spectral_sanity(const RegularGraph& g, const Spectrum& s,
                             double tol) {
  SanityReport r;
  r.tol = tol;
  const int d = g.degree();
  for (int i = 0; i < s.n(); ++i) {
    if (std::abs(s.values[i] - d) <= tol) ++r.top_multiplicity;
  }
  r.has_minus_d = s.n() > 0 && std::abs(s.values[s.n() - 1] + d) <= tol;
  r.max_abs = s.values.cwiseAbs().maxCoeff();
  r.bipartite = is_bipartite(g);

  std::vector<char> seen(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (seen[v]) continue;
    ++r.components;
    const auto dist = bfs_distances(g, v);
    for (VertexId w = 0; w < g.n(); ++w) {
      if (dist[w] >= 0) seen[w] = 1;
    }
  }
  return r;
}

double lambda_estimate(const RegularGraph& g, std::uint64_t seed,
                       int iterations) {
  const int n = g.n();
  CounterRng rng(seed, 7);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.next_double() - 0.5;
  x.array() -= x.mean();
  double norm = x.norm();
  if (norm == 0.0) {
    x[0] = 1.0;
    x[1] = -1.0;
    norm = x.norm();
  }
  x /= norm;

  double est = 0.0;
  Eigen::VectorXd y(n);
  for (int it = 0; it < iterations; ++it) {
    y.setZero();
    for (VertexId v = 0; v < n; ++v) {
      const double xv = x[v];
      for (VertexId w : g.neighbors(v)) y[w] += xv;
    }
    y.array() -= y.mean();  // keep round-off out of the all-ones direction
    const double amp = y.norm();
    if (amp == 0.0) break;
    est = amp;  // |A x| with |x| = 1: never exceeds lambda_star
    x = y / amp;
  }
  return est;
}

}  // namespace nbwalk
