#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sppde/error.hpp"
#include "sppde/interp.hpp"
#include "sppde/mesh.hpp"

using namespace sppde;

namespace {

GridFunction sample(const SpaceMesh& mesh, const TimeGrid& grid, const Fn2& f) {
  std::vector<double> v;
  for (int j = 0; j <= grid.n_steps(); ++j)
    for (int i = 0; i <= mesh.n_elements(); ++i) v.push_back(f(mesh[i], grid[j]));
  return GridFunction(mesh, grid, std::move(v));
}

double smooth(double x, double t) { return std::sin(3 * x + t) * std::exp(-t) + x * x * t; }

}  // namespace

TEST(MergePoints, SortsAndDeduplicates) {
  const std::vector<double> a{0.0, 0.25, 0.5, 1.0}, b{0.0, 0.125, std::nextafter(0.5, 1.0), 0.75, 1.0};
  const auto m = merge_points(a, b);
  const std::vector<double> want{0.0, 0.125, 0.25, 0.5, 0.75, 1.0};
  ASSERT_EQ(m.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(m[i], want[i], 1e-16);
}

TEST(MergePoints, KeepsDistinctClosePoints) {
  const std::vector<double> a{0.0, 1e-10, 1.0}, b{0.0, 2e-10, 1.0};
  EXPECT_EQ(merge_points(a, b).size(), 4u);
}

TEST(UnionMesh, NestedGridsGiveFinerGrid) {
  const auto coarse = sample(shishkin_q1(16, 1e-4, 1.0), uniform_time(4, 1.0), smooth);
  const auto fine = sample(shishkin_q1(32, 1e-4, 1.0), uniform_time(8, 1.0), smooth);
  const auto u = union_mesh(coarse, fine);
  // transition points differ between N and 2N, so the union has more than 33 x points
  EXPECT_GE(u.x.size(), 33u);
  EXPECT_EQ(u.t.size(), 9u);
}

TEST(Bilinear, ExactAtNodes) {
  const auto g = sample(shishkin_q2(32, 1e-5, 1.0, 1.0, 0.5), uniform_time(8, 1.0), smooth);
  for (int j = 0; j < g.nt(); ++j)
    for (int i = 0; i < g.nx(); ++i) EXPECT_EQ(bilinear_eval(g, g.mesh()[i], g.grid()[j]), g.value(j, i));
}

TEST(Bilinear, ReproducesBilinearFunctions) {
  const Fn2 f = [](double x, double t) { return 1.5 - 2 * x + 0.3 * t + 4 * x * t; };
  const auto g = sample(shishkin_q1(16, 1e-3, 1.0), uniform_time(5, 1.0), f);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = u(rng), t = u(rng);
    EXPECT_NEAR(bilinear_eval(g, x, t), f(x, t), 1e-13);
  }
}

TEST(Bilinear, QuadraticMidpointError) {
  const auto g = sample(shishkin_q1(8, 1.0, 1.0), uniform_time(1, 1.0), [](double x, double) { return x * x; });
  const double h = 1.0 / 8;
  EXPECT_NEAR(bilinear_eval(g, 3.5 * h, 0.3) - 3.5 * h * 3.5 * h, h * h / 4, 1e-15);
}

TEST(Bilinear, RejectsOutsideDomain) {
  const auto g = sample(shishkin_q1(8, 1.0, 1.0), uniform_time(2, 1.0), smooth);
  EXPECT_THROW(bilinear_eval(g, -0.01, 0.5), DomainError);
  EXPECT_THROW(bilinear_eval(g, 1.01, 0.5), DomainError);
  EXPECT_THROW(bilinear_eval(g, 0.5, 1.5), DomainError);
  EXPECT_THROW(bilinear_eval(g, 0.5, -1e-3), DomainError);
  EXPECT_NO_THROW(bilinear_eval(g, 1.0, 1.0));
}

TEST(MaxDiff, MatchesSerialReference) {
  const Fn2 other = [](double x, double t) { return smooth(x, t) + 1e-3 * std::cos(40 * x * t); };
  for (int N : {16, 64, 256}) {
    const auto a = sample(shishkin_q1(N, 1e-6, 1.0), uniform_time(N / 16 + 1, 1.0), smooth);
    const auto b = sample(shishkin_q1(2 * N, 1e-6, 1.0), uniform_time(N / 8 + 2, 1.0), other);
    EXPECT_EQ(max_diff(a, b), max_diff_serial(a, b)) << N;
  }
}

TEST(MaxDiff, Properties) {
  const auto m1 = shishkin_q1(32, 1e-4, 1.0);
  const auto m2 = shishkin_q1(64, 1e-4, 1.0);
  const auto m3 = shishkin_q2(64, 1e-4, 1.0, 1.0, 0.5);
  const auto a = sample(m1, uniform_time(4, 1.0), smooth);
  const auto b = sample(m2, uniform_time(8, 1.0), [](double x, double t) { return std::cos(x * t); });
  const auto c = sample(m3, uniform_time(6, 1.0), [](double x, double t) { return x - t * t; });

  EXPECT_EQ(max_diff(a, a), 0.0);
  const auto shifted = sample(m1, uniform_time(4, 1.0), [](double x, double t) { return smooth(x, t) - 0.75; });
  EXPECT_NEAR(max_diff(a, shifted), 0.75, 1e-15);

  EXPECT_EQ(max_diff(a, b), max_diff(b, a));
  EXPECT_LE(max_diff(a, c), max_diff(a, b) + max_diff(b, c) + 1e-15);

  // dominates the difference sampled at a's own nodes
  double own = 0.0;
  for (int j = 0; j < a.nt(); ++j)
    for (int i = 0; i < a.nx(); ++i)
      own = std::max(own, std::fabs(a.value(j, i) - bilinear_eval(b, a.mesh()[i], a.grid()[j])));
  EXPECT_GE(max_diff(a, b), own);
}

TEST(MaxDiff, RejectsDifferentHorizons) {
  const auto a = sample(shishkin_q1(8, 1.0, 1.0), uniform_time(2, 1.0), smooth);
  const auto b = sample(shishkin_q1(8, 1.0, 2.0), uniform_time(2, 2.0), smooth);
  EXPECT_THROW(max_diff(a, b), DomainError);
  EXPECT_THROW(max_diff_serial(a, b), DomainError);
}
