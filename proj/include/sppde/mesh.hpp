#pragma once

#include <optional>
#include <span>
#include <vector>

namespace sppde {

enum class MeshKind { Q1, Q2 };

// Where the piecewise-uniform mesh switches step size.
struct Transition {
  MeshKind kind;
  double width;                             // sigma for Q1, tau for Q2
  std::optional<double> interior_point;     // d for Q2
};

// Piecewise-uniform Shishkin mesh on [0,1]. Immutable after construction.
class SpaceMesh {
 public:
  SpaceMesh(std::vector<double> points, Transition transition);

  std::span<const double> points() const { return points_; }
  double operator[](std::size_t i) const { return points_[i]; }
  int n_elements() const { return static_cast<int>(points_.size()) - 1; }
  const Transition& transition() const { return transition_; }

  // h_i = x_i - x_{i-1}, i = 1..N
  double width(int i) const { return points_[i] - points_[i - 1]; }

 private:
  std::vector<double> points_;
  Transition transition_;
};

class TimeGrid {
 public:
  TimeGrid(int M, double T);

  std::span<const double> points() const { return points_; }
  double operator[](std::size_t j) const { return points_[j]; }
  int n_steps() const { return static_cast<int>(points_.size()) - 1; }
  double step() const { return step_; }
  double final_time() const { return points_.back(); }

 private:
  std::vector<double> points_;
  double step_;
};

// sigma = min(1/4, (4/mu) sqrt(eps T) ln N); N/4, N/2, N/4 elements on
// [0,sigma], [sigma,1-sigma], [1-sigma,1]. Also used for boundary-in-time jumps.
double shishkin_q1_width(int N, double eps, double T, double mu);
SpaceMesh shishkin_q1(int N, double eps, double T, double mu = 1.0);

// tau = min(1/8, (4/mu) sqrt(eps T) ln N); N/8, N/4, N/4, N/4, N/8 elements on
// [0,tau], [tau,d-tau], [d-tau,d+tau], [d+tau,1-tau], [1-tau,1].
double shishkin_q2_width(int N, double eps, double T, double mu);
SpaceMesh shishkin_q2(int N, double eps, double T, double mu, double d);

TimeGrid uniform_time(int M, double T);

}  // namespace sppde
