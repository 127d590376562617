#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "corpus.hpp"
#include "nbwalk/graph.hpp"
#include "nbwalk/nbtheory.hpp"
#include "nbwalk/spectra.hpp"
#include "oracles.hpp"

using nbwalk::NbCountMatrix;
using nbwalk::NbTheoryError;
using nbwalk::RegularGraph;
using nbwalk::Spectrum;
using nbwalk::VertexId;

TEST_CASE("second-kind Chebyshev recurrence") {
  CHECK(nbwalk::chebyshev_u(-1, 0.7) == 0.0);
  CHECK(nbwalk::chebyshev_u(0, 0.7) == 1.0);
  CHECK(nbwalk::chebyshev_u(1, 0.7) == doctest::Approx(1.4));
  for (double x : {-0.9, -0.3, 0.0, 0.4, 1.0, 1.7}) {
    CHECK(nbwalk::chebyshev_u(2, x) == doctest::Approx(4 * x * x - 1));
    CHECK(nbwalk::chebyshev_u(3, x) ==
          doctest::Approx(8 * x * x * x - 4 * x));
  }
  // U_k(1) = k + 1 and the trig form inside [-1, 1]
  for (int k = 0; k <= 12; ++k) {
    CHECK(nbwalk::chebyshev_u(k, 1.0) == doctest::Approx(k + 1.0));
    for (double theta : {0.3, 1.1, 2.5}) {
      CHECK(nbwalk::chebyshev_u(k, std::cos(theta)) ==
            doctest::Approx(std::sin((k + 1) * theta) / std::sin(theta))
                .epsilon(1e-10));
    }
    const double x = 0.62;
    CHECK(nbwalk::chebyshev_u(k, -x) ==
          doctest::Approx((k % 2 ? -1 : 1) * nbwalk::chebyshev_u(k, x)));
  }
  CHECK_THROWS_AS(nbwalk::chebyshev_u(-2, 0.0), NbTheoryError);
}

TEST_CASE("count polynomial composition and top-eigenvalue value") {
  for (int d : {3, 4, 9}) {
    for (int k = 1; k <= 12; ++k) {
      for (double x : {-1.2, -0.5, 0.0, 0.3, 0.9, 1.4}) {
        const double direct =
            std::sqrt((d - 1.0) / d) * nbwalk::chebyshev_u(k, x) -
            nbwalk::chebyshev_u(k - 2, x) / std::sqrt(d * (d - 1.0));
        CHECK(nbwalk::nb_count_poly(k, x, d) ==
              doctest::Approx(direct).epsilon(1e-12));
      }
      // at the top of the spectrum the polynomial reproduces the total
      // count of non-backtracking walks per start, sqrt(d (d-1)^(k-1))
      const double x_top = d / (2.0 * std::sqrt(d - 1.0));
      CHECK(nbwalk::nb_count_poly(k, x_top, d) ==
            doctest::Approx(std::sqrt(d * std::pow(d - 1.0, k - 1)))
                .epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(nbwalk::nb_count_poly(0, 0.5, 3), NbTheoryError);
  CHECK_THROWS_AS(nbwalk::nb_count_poly(3, 0.5, 1), NbTheoryError);
}

TEST_CASE("growth factor") {
  CHECK(nbwalk::chebyshev_growth(0.0) == 1.0);
  CHECK(nbwalk::chebyshev_growth(0.8) == 1.0);
  CHECK(nbwalk::chebyshev_growth(1.0) == 1.0);
  CHECK(nbwalk::chebyshev_growth(1.0 + 1e-13) == 1.0);
  CHECK(nbwalk::chebyshev_growth(1.25) == doctest::Approx(2.0));
  CHECK(nbwalk::chebyshev_growth(2.0) ==
        doctest::Approx(2.0 + std::sqrt(3.0)));
  // monotone beyond the band edge
  double last = 1.0;
  for (double x = 1.0; x <= 3.0; x += 0.01) {
    const double v = nbwalk::chebyshev_growth(x);
    CHECK(v >= last - 1e-15);
    last = v;
  }
  CHECK_THROWS_AS(nbwalk::chebyshev_growth(-0.1), NbTheoryError);

  // the factor is the exponential growth rate of the count polynomial
  // outside the band, and the rate is 1 (bounded oscillation) inside
  const int k = 400;
  for (int d : {3, 5}) {
    for (double x : {1.15, 1.6, 2.2}) {
      const double rate = static_cast<double>(
          oracle::log_abs_nb_poly(k, static_cast<long double>(x), d) / k);
      CHECK(rate == doctest::Approx(std::log(nbwalk::chebyshev_growth(x)))
                        .epsilon(0.01));
    }
    const double inside = static_cast<double>(
        oracle::log_abs_nb_poly(k, 0.4L, d) / k);
    CHECK(std::abs(inside) <= 0.02);
  }
}

TEST_CASE("closed-form rates for both walks") {
  const auto k10 = nbwalk::mixing_rates(1.0, 9);
  CHECK(k10.rho_simple == doctest::Approx(1.0 / 9).epsilon(1e-14));
  CHECK(k10.rho_nb == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-14));
  CHECK(k10.ratio > 1.0);

  const auto pet = nbwalk::mixing_rates(2.0, 3);
  CHECK(pet.rho_simple == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(pet.rho_nb == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  // lambda = d gives rate 1 for both walks
  const auto full = nbwalk::mixing_rates(3.0, 3);
  CHECK(full.rho_simple == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(full.rho_nb == doctest::Approx(1.0).epsilon(1e-14));

  // lambda = 0: the simple rate vanishes and the ratio is undefined
  const auto zero = nbwalk::mixing_rates(0.0, 5);
  CHECK(zero.rho_simple == 0.0);
  CHECK(zero.rho_nb == doctest::Approx(0.5));
  CHECK(std::isnan(zero.ratio));

  CHECK_THROWS_AS(nbwalk::mixing_rates(3.1, 3), NbTheoryError);
  CHECK_THROWS_AS(nbwalk::mixing_rates(-0.5, 3), NbTheoryError);
  CHECK_THROWS_AS(nbwalk::mixing_rates(1.0, 2), NbTheoryError);

  // above the band edge the ratio sits in [d/(2(d-1)), 1], reaching the
  // lower end exactly at the edge
  for (int d : {3, 4, 10}) {
    const double edge = 2.0 * std::sqrt(d - 1.0);
    CHECK(nbwalk::mixing_rates(edge, d).ratio ==
          doctest::Approx(d / (2.0 * (d - 1.0))).epsilon(1e-12));
    for (double t = 0.0; t <= 1.0; t += 0.05) {
      const double lambda = edge + t * (d - edge);
      const auto r = nbwalk::mixing_rates(lambda, d);
      CHECK(r.ratio >= d / (2.0 * (d - 1.0)) - 1e-12);
      CHECK(r.ratio <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("count matrix on the complete graph of four vertices") {
  const RegularGraph k4 = nbwalk::complete_graph(4);
  const NbCountMatrix c1 = nbwalk::nb_count_matrix(k4, 1);
  const NbCountMatrix c2 = nbwalk::nb_count_matrix(k4, 2);
  const NbCountMatrix c3 = nbwalk::nb_count_matrix(k4, 3);
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = 0; v < 4; ++v) {
      const long long adj = (u != v) ? 1 : 0;
      CHECK(static_cast<long long>(c1.at(u, v)) == adj);
      CHECK(static_cast<long long>(c2.at(u, v)) == 2 * adj);
      CHECK(static_cast<long long>(c3.at(u, v)) == (u == v ? 6 : 2));
    }
  }
  CHECK(static_cast<long long>(c3.total_per_row()) == 3 * 2 * 2);
}

TEST_CASE("count matrix equals exhaustive enumeration") {
  const std::vector<RegularGraph> graphs{
      nbwalk::complete_graph(4), corpus::prism(),  corpus::petersen(),
      corpus::complete_bipartite_33(), corpus::two_k4(), corpus::cycle(9),
      nbwalk::random_regular(12, 3, 8)};
  for (const RegularGraph& g : graphs) {
    for (int k = 1; k <= 6; ++k) {
      const NbCountMatrix counts = nbwalk::nb_count_matrix(g, k);
      const auto ref = oracle::enumerate_nb_walk_counts(g, k);
      for (VertexId u = 0; u < g.n(); ++u) {
        for (VertexId v = 0; v < g.n(); ++v) {
          CHECK(static_cast<long long>(counts.at(u, v)) ==
                ref[static_cast<std::size_t>(u) * g.n() + v]);
        }
      }
    }
  }
}

TEST_CASE("count rows, columns and symmetry") {
  const RegularGraph pet = corpus::petersen();
  for (int k = 1; k <= 8; ++k) {
    const NbCountMatrix c = nbwalk::nb_count_matrix(pet, k);
    const auto total = c.total_per_row();
    CHECK(static_cast<long long>(total) ==
          3LL * (1LL << (k - 1)));  // d (d-1)^(k-1)
    for (VertexId u = 0; u < pet.n(); ++u) {
      NbCountMatrix::Count row = 0, col = 0;
      for (VertexId v = 0; v < pet.n(); ++v) {
        row += c.at(u, v);
        col += c.at(v, u);
        CHECK(static_cast<long long>(c.at(u, v)) ==
              static_cast<long long>(c.at(v, u)));
      }
      CHECK(static_cast<long long>(row) == static_cast<long long>(total));
      CHECK(static_cast<long long>(col) == static_cast<long long>(total));
    }
  }
}

TEST_CASE("overflow guard on the count recurrence") {
  const RegularGraph k11 = nbwalk::complete_graph(11);
  CHECK_NOTHROW(nbwalk::nb_count_matrix(k11, 38));
  try {
    nbwalk::nb_count_matrix(k11, 39);
    FAIL("expected OverflowRisk");
  } catch (const NbTheoryError& e) {
    CHECK(e.kind() == NbTheoryError::Kind::OverflowRisk);
  }
  CHECK_THROWS_AS(nbwalk::nb_count_matrix(k11, 0), NbTheoryError);
}

TEST_CASE("integer counts match the spectral polynomial evaluation") {
  const std::vector<RegularGraph> graphs{
      nbwalk::complete_graph(4), corpus::prism(), corpus::petersen(),
      nbwalk::random_regular(20, 3, 31), nbwalk::random_regular(12, 4, 32)};
  for (const RegularGraph& g : graphs) {
    const int d = g.degree();
    const Eigen::MatrixXd a = nbwalk::adjacency_matrix(g);
    Eigen::MatrixXd vecs;
    const Eigen::VectorXd vals = nbwalk::jacobi_eigenvalues(a, {}, &vecs);
    const double half_band = 2.0 * std::sqrt(d - 1.0);
    for (int k = 1; k <= 12; ++k) {
      const double scale = std::sqrt(d * std::pow(d - 1.0, k - 1));
      Eigen::VectorXd fv(vals.size());
      for (int i = 0; i < vals.size(); ++i) {
        fv[i] = nbwalk::nb_count_poly(k, vals[i] / half_band, d) * scale;
      }
      const Eigen::MatrixXd spectral =
          vecs * fv.asDiagonal() * vecs.transpose();
      const Eigen::MatrixXd exact = nbwalk::nb_count_matrix(g, k).to_double();
      CHECK((spectral - exact).cwiseAbs().maxCoeff() <= 1e-6);
    }
  }
}

TEST_CASE("deviation eigenvalue of the normalized counts") {
  const Spectrum k4 = nbwalk::adjacency_spectrum(nbwalk::complete_graph(4));
  CHECK(nbwalk::nb_second_eigenvalue(k4, 3, 1) ==
        doctest::Approx(1.0 / 3).epsilon(1e-12));

  // disconnected graphs keep a second copy of the top eigenvalue
  const Spectrum two = nbwalk::adjacency_spectrum(corpus::two_k4());
  for (int k : {1, 2, 5}) {
    CHECK(nbwalk::nb_second_eigenvalue(two, 3, k) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS(nbwalk::nb_second_eigenvalue(k4, 3, 0), NbTheoryError);
}

TEST_CASE("rate curve shape") {
  for (int d : {3, 10}) {
    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i) grid.push_back(d * i / 200.0);
    const auto rows = nbwalk::rate_curve(d, grid);
    REQUIRE(rows.size() == grid.size());

    const double flat = 1.0 / std::sqrt(d - 1.0);
    const double edge = 2.0 * std::sqrt(d - 1.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].lambda == doctest::Approx(grid[i]));
      CHECK(rows[i].rho_simple == doctest::Approx(grid[i] / d));
      if (rows[i].lambda <= edge) {
        CHECK(std::abs(rows[i].rho_nb - flat) <= 1e-12);
      }
      if (i > 0) {
        CHECK(rows[i].rho_simple >= rows[i - 1].rho_simple - 1e-15);
        CHECK(rows[i].rho_nb >= rows[i - 1].rho_nb - 1e-15);
      }
    }
    CHECK(std::abs(rows.front().rho_nb - flat) <= 1e-12);
    CHECK(std::abs(rows.back().rho_nb - 1.0) <= 1e-12);
    CHECK(rows.back().rho_simple == doctest::Approx(1.0));
  }
  std::vector<double> trivial{0.0};
  CHECK_THROWS_AS(nbwalk::rate_curve(2, trivial), NbTheoryError);
}

TEST_CASE("count polynomials are orthonormal under the tree spectral measure") {
  // weight in x = lambda / (2 sqrt(d-1)) coordinates:
  //   w(x) = 2 d (d-1) sqrt(1 - x^2) / (pi (d^2 - 4 (d-1) x^2))
  // checked by trapezoid quadrature after x = cos(phi), where the integrand
  // is smooth and periodic, so the rule converges spectrally
  const int nodes = 20000;
  for (int d : {3, 7}) {
    auto weight = [&](double x) {
      return 2.0 * d * (d - 1.0) * std::sqrt(std::max(0.0, 1.0 - x * x)) /
             (M_PI * (d * d - 4.0 * (d - 1.0) * x * x));
    };
    auto integrate = [&](auto f) {
      double sum = 0.0;
      for (int i = 0; i < nodes; ++i) {
        const double phi = M_PI * (i + 0.5) / nodes;
        const double x = std::cos(phi);
        // dx = -sin(phi) dphi; orientation handled by summing positively
        sum += f(x) * weight(x) * std::sin(phi) * (M_PI / nodes);
      }
      return sum;
    };

    CHECK(integrate([](double) { return 1.0; }) ==
          doctest::Approx(1.0).epsilon(1e-10));
    for (int j = 1; j <= 6; ++j) {
      for (int k = j; k <= 6; ++k) {
        const double ip = integrate([&](double x) {
          return nbwalk::nb_count_poly(j, x, d) * nbwalk::nb_count_poly(k, x, d);
        });
        CHECK(std::abs(ip - (j == k ? 1.0 : 0.0)) <= 1e-9);
      }
    }
  }
}
