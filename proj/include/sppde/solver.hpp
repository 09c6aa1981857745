#pragma once

#include <span>
#include <vector>

#include "sppde/mesh.hpp"
#include "sppde/problem.hpp"

namespace sppde {

// Discrete solution on a SpaceMesh x TimeGrid tensor grid, stored row-major by
// time level: value(j, i) = Y(x_i, t_j).
class GridFunction {
 public:
  GridFunction(SpaceMesh mesh, TimeGrid grid, std::vector<double> values);

  const SpaceMesh& mesh() const { return mesh_; }
  const TimeGrid& grid() const { return grid_; }
  int nx() const { return mesh_.n_elements() + 1; }
  int nt() const { return grid_.n_steps() + 1; }
  double value(int j, int i) const { return values_[static_cast<std::size_t>(j) * nx() + i]; }
  std::span<const double> row(int j) const {
    return {values_.data() + static_cast<std::size_t>(j) * nx(), static_cast<std::size_t>(nx())};
  }
  std::span<const double> values() const { return values_; }

 private:
  SpaceMesh mesh_;
  TimeGrid grid_;
  std::vector<double> values_;
};

// Row i couples unknowns i-1, i, i+1: sub[i] x[i-1] + diag[i] x[i] + super[i] x[i+1] = rhs[i].
// sub[0] and super[n-1] are ignored.
struct TridiagonalSystem {
  std::vector<double> sub, diag, super, rhs;

  explicit TridiagonalSystem(std::size_t n = 0) : sub(n), diag(n), super(n), rhs(n) {}
  std::size_t size() const { return diag.size(); }
};

// ((u_{i+1}-u_i)/h_{i+1} - (u_i-u_{i-1})/h_i) / ((h_i+h_{i+1})/2)
inline double central_second_difference(double u_left, double u, double u_right, double h_left, double h_right) {
  return ((u_right - u) / h_right - (u - u_left) / h_left) / (0.5 * (h_left + h_right));
}

struct BoundaryValues {
  double left;
  double right;
};

// One backward-Euler step at time t:
// -eps d2x Y_i + b(x_i,t) Y_i + (Y_i - Y_prev_i)/k = F_i at interior nodes,
// identity rows pinning Y_0 and Y_N to the boundary values.
TridiagonalSystem assemble_step(const SpaceMesh& mesh, double t, double k, const ScalarField2D& b, double eps,
                                std::span<const double> F_row, std::span<const double> Y_prev, BoundaryValues bc);

// Thomas algorithm. Throws NumericalError on a zero pivot.
std::vector<double> thomas_solve(TridiagonalSystem sys);

// March the y-problem from t = 0 to T. Row 0 holds y_initial at the mesh
// nodes; for j >= 1 the end columns hold y_left(t_j), y_right(t_j).
GridFunction solve_parabolic(const TransformedProblem& tp, const SpaceMesh& mesh, const TimeGrid& grid, double eps);

}  // namespace sppde
