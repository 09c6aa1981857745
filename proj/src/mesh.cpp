#include "sppde/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sppde/error.hpp"

namespace sppde {

namespace {

void check_common(int N, int divisor, int minimum, double eps, double T, double mu, const char* name) {
  if (N < minimum || N % divisor != 0)
    throw ConfigError(std::string(name) + ": N must be >= " + std::to_string(minimum) + " and divisible by " +
                      std::to_string(divisor) + ", got N=" + std::to_string(N));
  if (!(eps > 0.0)) throw ConfigError(std::string(name) + ": eps must be > 0");
  if (!(T > 0.0)) throw ConfigError(std::string(name) + ": T must be > 0");
  if (!(mu > 0.0 && mu <= 1.0)) throw ConfigError(std::string(name) + ": mu must lie in (0,1]");
}

// Appends `count` uniform elements on [a,b]; the endpoint b is written exactly.
void append_band(std::vector<double>& pts, double a, double b, int count) {
  const double h = (b - a) / count;
  for (int i = 1; i < count; ++i) pts.push_back(a + i * h);
  pts.push_back(b);
}

double layer_width(double cap, int N, double eps, double T, double mu) {
  return std::min(cap, 4.0 / mu * std::sqrt(eps * T) * std::log(static_cast<double>(N)));
}

}  // namespace

SpaceMesh::SpaceMesh(std::vector<double> points, Transition transition)
    : points_(std::move(points)), transition_(transition) {
  if (points_.size() < 2 || points_.front() != 0.0 || points_.back() != 1.0)
    throw ConfigError("SpaceMesh: points must start at 0 and end at 1");
  if (std::adjacent_find(points_.begin(), points_.end(), std::greater_equal<>()) != points_.end())
    throw ConfigError("SpaceMesh: points must be strictly increasing");
}

TimeGrid::TimeGrid(int M, double T) : step_(0.0) {
  if (M < 1) throw ConfigError("TimeGrid: M must be >= 1, got " + std::to_string(M));
  if (!(T > 0.0)) throw ConfigError("TimeGrid: T must be > 0");
  step_ = T / M;
  points_.resize(M + 1);
  for (int j = 0; j < M; ++j) points_[j] = j * step_;
  points_[M] = T;
}

double shishkin_q1_width(int N, double eps, double T, double mu) {
  return layer_width(0.25, N, eps, T, mu);
}

double shishkin_q2_width(int N, double eps, double T, double mu) {
  return layer_width(0.125, N, eps, T, mu);
}

SpaceMesh shishkin_q1(int N, double eps, double T, double mu) {
  check_common(N, 4, 8, eps, T, mu, "shishkin_q1");
  const double sigma = shishkin_q1_width(N, eps, T, mu);
  std::vector<double> pts;
  pts.reserve(N + 1);
  pts.push_back(0.0);
  append_band(pts, 0.0, sigma, N / 4);
  append_band(pts, sigma, 1.0 - sigma, N / 2);
  append_band(pts, 1.0 - sigma, 1.0, N / 4);
  return SpaceMesh(std::move(pts), {MeshKind::Q1, sigma, std::nullopt});
}

SpaceMesh shishkin_q2(int N, double eps, double T, double mu, double d) {
  check_common(N, 8, 16, eps, T, mu, "shishkin_q2");
  if (!(d > 0.0 && d < 1.0)) throw ConfigError("shishkin_q2: d must lie in (0,1)");
  const double tau = shishkin_q2_width(N, eps, T, mu);
  if (d - tau <= tau || d + tau >= 1.0 - tau)
    throw ConfigError("shishkin_q2: infeasible geometry, d=" + std::to_string(d) + " with tau=" +
                      std::to_string(tau) + " needs tau < d - tau and d + tau < 1 - tau");
  std::vector<double> pts;
  pts.reserve(N + 1);
  pts.push_back(0.0);
  append_band(pts, 0.0, tau, N / 8);
  append_band(pts, tau, d - tau, N / 4);
  append_band(pts, d - tau, d, N / 8);
  append_band(pts, d, d + tau, N / 8);
  append_band(pts, d + tau, 1.0 - tau, N / 4);
  append_band(pts, 1.0 - tau, 1.0, N / 8);
  return SpaceMesh(std::move(pts), {MeshKind::Q2, tau, d});
}

TimeGrid uniform_time(int M, double T) { return TimeGrid(M, T); }

}  // namespace sppde
