#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "nbwalk/graph.hpp"

namespace nbwalk {

class SpectraError : public std::runtime_error {
 public:
  enum class Kind { NoConvergence, DenseLimitExceeded, BadArgument };

  SpectraError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Full adjacency spectrum, sorted descending. residual is the largest
// entry of |A v - lambda v| over all recomputed eigenpairs.
struct Spectrum {
  Eigen::VectorXd values;
  double residual = 0.0;
  int n() const { return static_cast<int>(values.size()); }
};

struct JacobiOptions {
  // Convergence: off-diagonal Frobenius norm <= tol * Frobenius norm of the
  // input. A relative test keeps the sweep count size-independent.
  double tol = 1e-12;
  int max_sweeps = 100;
  int dense_limit = 4096;
};

// Cyclic Jacobi rotations on a dense symmetric matrix. Returns eigenvalues
// in descending order; optionally accumulates eigenvectors (columns of
// *vectors, matching the returned order).
Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a, const JacobiOptions& opt,
                                   Eigen::MatrixXd* vectors = nullptr);

Eigen::MatrixXd adjacency_matrix(const RegularGraph& g);

// Dense full spectrum of the adjacency matrix. Throws DenseLimitExceeded
// when n > opt.dense_limit and NoConvergence if the sweep budget runs out.
Spectrum adjacency_spectrum(const RegularGraph& g, const JacobiOptions& opt = {});

// max(lambda_2, |lambda_n|): the nontrivial spectral radius controlling
// both walks. Requires n >= 2.
double lambda_star(const Spectrum& s);

// Every d-regular graph on n > d vertices satisfies
// lambda_star >= sqrt(d * (n - d) / (n - 1)), by the trace of A^2.
double trace_lower_bound(int n, int d);

// Cross-checks between the computed spectrum and graph structure.
struct SanityReport {
  int top_multiplicity = 0;    // eigenvalues equal to d
  int components = 0;          // connected components via BFS
  bool bipartite = false;
  bool has_minus_d = false;    // eigenvalue equal to -d
  double max_abs = 0.0;
  double tol = 0.0;

  bool pass(int d) const {
    return top_multiplicity == components && bipartite == has_minus_d &&
           max_abs <= d + tol;
  }
};
SanityReport spectral_sanity(const RegularGraph& g, const Spectrum& s,
                             double tol = 1e-6);

// Power iteration estimate of lambda_star for graphs too large for the
// dense path. Iterates A on mean-free vectors (regularity keeps the
// all-ones direction invariant, so centering deflates it exactly) and
// returns the final amplification |A x| / |x|, which is always a lower
// bound on lambda_star and converges to it from below.
double lambda_estimate(const RegularGraph& g, std::uint64_t seed = 12345,
                       int iterations = 3000);

}  // namespace nbwalk
