#pragma once

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbwalk/graph.hpp"
#include "nbwalk/spectra.hpp"

namespace nbwalk {

class NbTheoryError : public std::runtime_error {
 public:
  enum class Kind { OverflowRisk, BadArgument };

  NbTheoryError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Chebyshev polynomial of the second kind, U_k(x), by forward recurrence.
// U_{-1} = 0, U_0 = 1, U_{k+1} = 2 x U_k - U_{k-1}.
double chebyshev_u(int k, double x);

// Scalar polynomial whose matrix version counts non-backtracking walks:
// sqrt((d-1)/d) U_k(x) - U_{k-2}(x) / sqrt(d (d-1)). k >= 1, d >= 2.
double nb_count_poly(int k, double x, int d);

// Growth factor of nb_count_poly outside the oscillatory band:
// 1 on [0, 1], x + sqrt(x^2 - 1) for x > 1. Negative input is rejected.
double chebyshev_growth(double x);

// Asymptotic per-step deviation decay for both walks on a d-regular graph
// with nontrivial spectral radius lambda.
struct RatePair {
  double lambda = 0.0;
  int degree = 0;
  double rho_simple = 0.0;  // lambda / d
  double rho_nb = 0.0;      // chebyshev_growth(lambda / (2 sqrt(d-1))) / sqrt(d-1)
  double ratio = 0.0;       // rho_nb / rho_simple, NaN when rho_simple == 0
};
RatePair mixing_rates(double lambda, int d);

// Exact counts of non-backtracking walks of length walk_length between every
// vertex pair, computed by the integer three-term recurrence
//   C_1 = A,  C_2 = A^2 - d I,  C_{k+1} = A C_k - (d-1) C_{k-1}.
// Stored in 128-bit integers; every row and column sums to d (d-1)^(k-1).
// d = 2 is allowed but degenerate (the walk is a deterministic rotation).
class NbCountMatrix {
 public:
  using Count = __int128;

  NbCountMatrix(int n, int walk_length, int degree)
      : n_(n), k_(walk_length), d_(degree),
        c_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const { return n_; }
  int walk_length() const { return k_; }
  int degree() const { return d_; }

  Count& at(VertexId u, VertexId v) { return c_[static_cast<std::size_t>(u) * n_ + v]; }
  Count at(VertexId u, VertexId v) const { return c_[static_cast<std::size_t>(u) * n_ + v]; }

  // d (d-1)^(k-1), the common row sum.
  Count total_per_row() const;

  Eigen::MatrixXd to_double() const;

 private:
  int n_, k_, d_;
  std::vector<Count> c_;
};

// Throws OverflowRisk before any 128-bit intermediate could overflow.
NbCountMatrix nb_count_matrix(const RegularGraph& g, int walk_length);

// Largest deviation eigenvalue of the normalized walk-count matrix at the
// given length: max over the non-top eigenvalues lambda_i of
// |nb_count_poly(k, lambda_i / (2 sqrt(d-1)), d)| / sqrt(d (d-1)^(k-1)).
// Exactly one top eigenvalue is excluded, so disconnected inputs yield 1.
double nb_second_eigenvalue(const Spectrum& s, int d, int walk_length);

// Rate pairs across a grid of lambda values in [0, d], for plotting the
// simple-versus-non-backtracking comparison at fixed degree.
struct RateCurveRow {
  double lambda;
  double rho_simple;
  double rho_nb;
};
std::vector<RateCurveRow> rate_curve(int d, std::span<const double> grid);

}  // namespace nbwalk
