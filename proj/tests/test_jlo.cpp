#include "svirlab/jlo.hpp"
#include "svirlab/types.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace svirlab;

namespace {

Mat random_hermitian(int n, std::mt19937& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

Mat random_matrix(int n, std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
  return a;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_CASE("divided differences of e^{-x} against 50-digit recursion") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (int n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> x;
      for (int i = 0; i <= n; ++i) x.push_back(u(rng));
      const double want = oracle::divided_difference_exp_mp(x);
      CHECK(divided_difference_exp(x) == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("clustered and confluent nodes") {
  // all nodes equal: (-1)^n e^{-x} / n!
  for (int n = 0; n <= 10; ++n) {
    std::vector<double> x(n + 1, 1.5);
    CHECK(divided_difference_exp(x) == doctest::Approx(std::pow(-1.0, n) * std::exp(-1.5) / factorial(n)).epsilon(1e-13));
  }
  // nearly equal nodes where the plain recursion cancels
  std::vector<double> x = {1.0, 1.0 + 1e-7, 1.0 + 2e-7, 3.0};
  const double mp = oracle::divided_difference_exp_mp(x);
  CHECK(divided_difference_exp(x) == doctest::Approx(mp).epsilon(1e-7));
  CHECK(divided_difference_exp_taylor({0.0, 0.5, 1.0}) == doctest::Approx(oracle::divided_difference_exp_mp({0.0, 0.5, 1.0})).epsilon(1e-13));
}

TEST_CASE("divided differences are symmetric in the nodes") {
  std::vector<double> x = {0.3, 2.0, 5.0, 1.1, 0.31};
  const double a = divided_difference_exp(x);
  std::reverse(x.begin(), x.end());
  CHECK(divided_difference_exp(x) == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("JLO components against the Van Loan block exponential") {
  std::mt19937 rng(11);
  const int n = 6;
  for (int trial = 0; trial < 4; ++trial) {
    const Mat q = random_hermitian(n, rng, 0.7);
    const Mat id = Mat::Identity(n, n);
    JloEvaluator ev(q, std::nullopt);
    for (int deg = 0; deg <= 4; ++deg) {
      std::vector<Mat> a;
      for (int i = 0; i <= deg; ++i) a.push_back(random_matrix(n, rng));
      const cplx got = ev.tau(a);
      const cplx want = oracle::jlo_tau(q, id, a);
      CHECK(std::abs(got - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("JLO with a grading and degenerate Q^2") {
  // Q odd for Gamma = diag(1, 1, -1, -1), with a repeated spectrum
  Mat q = Mat::Zero(4, 4);
  q(0, 2) = q(2, 0) = 1.0;
  q(1, 3) = q(3, 1) = 1.0;
  RVec gamma(4);
  gamma << 1, 1, -1, -1;
  JloEvaluator ev(q, gamma);
  CHECK(ev.clusters() == 1);
  std::mt19937 rng(3);
  const Mat g = gamma.cast<cplx>().asDiagonal();
  for (int deg = 0; deg <= 3; ++deg) {
    std::vector<Mat> a;
    for (int i = 0; i <= deg; ++i) a.push_back(random_matrix(4, rng));
    CHECK(std::abs(ev.tau(a) - oracle::jlo_tau(q, g, a)) < 1e-10);
  }
}

TEST_CASE("tau_0 of the identity is the heat supertrace") {
  Mat q = Mat::Zero(2, 2);
  q(0, 1) = q(1, 0) = 0.8;
  RVec gamma(2);
  gamma << 1, -1;
  JloEvaluator ev(q, gamma);
  CHECK(std::abs(ev.tau({Mat::Identity(2, 2)})) < 1e-14);
  JloEvaluator ev2(q, std::nullopt);
  CHECK(ev2.tau({Mat::Identity(2, 2)}).real() == doctest::Approx(2 * std::exp(-0.64)));
}

TEST_CASE("degree and budget limits") {
  std::mt19937 rng(5);
  const Mat q = random_hermitian(5, rng);
  JloOptions o;
  o.n_max = 2;
  JloEvaluator ev(q, std::nullopt, o);
  std::vector<Mat> a(4, random_matrix(5, rng));
  CHECK_THROWS_AS(ev.tau(a), Error);
  JloOptions tight;
  tight.work_budget = 10;
  JloEvaluator ev2(q, std::nullopt, tight);
  CHECK_THROWS_AS(ev2.tau(std::vector<Mat>(3, random_matrix(5, rng))), Error);
  CHECK_THROWS_AS(JloEvaluator(Mat::Constant(2, 2, cplx(0, 1)), std::nullopt), Error);
}
