#include "sppde/solver.hpp"

#include <cmath>
#include <string>

#include "sppde/error.hpp"

namespace sppde {

GridFunction::GridFunction(SpaceMesh mesh, TimeGrid grid, std::vector<double> values)
    : mesh_(std::move(mesh)), grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(nx()) * nt())
    throw ConfigError("GridFunction: value count does not match mesh x grid");
}

TridiagonalSystem assemble_step(const SpaceMesh& mesh, double t, double k, const ScalarField2D& b, double eps,
                                std::span<const double> F_row, std::span<const double> Y_prev, BoundaryValues bc) {
  const int N = mesh.n_elements();
  TridiagonalSystem sys(N + 1);
  sys.diag[0] = 1.0;
  sys.rhs[0] = bc.left;
  sys.diag[N] = 1.0;
  sys.rhs[N] = bc.right;
  const double inv_k = 1.0 / k;
  for (int i = 1; i < N; ++i) {
    const double h_left = mesh.width(i);
    const double h_right = mesh.width(i + 1);
    const double hbar = 0.5 * (h_left + h_right);
    const double lo = eps / (h_left * hbar);
    const double hi = eps / (h_right * hbar);
    sys.sub[i] = -lo;
    sys.super[i] = -hi;
    sys.diag[i] = lo + hi + b(mesh[i], t) + inv_k;
    sys.rhs[i] = F_row[i] + inv_k * Y_prev[i];
  }
  return sys;
}

std::vector<double> thomas_solve(TridiagonalSystem sys) {
  const std::size_t n = sys.size();
  if (n == 0) return {};
  auto& c = sys.super;
  auto& r = sys.rhs;
  if (sys.diag[0] == 0.0) throw NumericalError("thomas_solve: zero pivot in row 0");
  c[0] /= sys.diag[0];
  r[0] /= sys.diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double pivot = sys.diag[i] - sys.sub[i] * c[i - 1];
    if (pivot == 0.0) throw NumericalError("thomas_solve: zero pivot in row " + std::to_string(i));
    if (i + 1 < n) c[i] /= pivot;
    r[i] = (r[i] - sys.sub[i] * r[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) r[i] -= c[i] * r[i + 1];
  return std::move(r);
}

GridFunction solve_parabolic(const TransformedProblem& tp, const SpaceMesh& mesh, const TimeGrid& grid, double eps) {
  if (std::fabs(grid.final_time() - tp.T) > 1e-14 * tp.T)
    throw ConfigError("solve_parabolic: time grid ends at " + std::to_string(grid.final_time()) +
                      " but the problem has T=" + std::to_string(tp.T));
  const int nx = mesh.n_elements() + 1;
  const int M = grid.n_steps();
  const double k = grid.step();
  std::vector<double> values(static_cast<std::size_t>(nx) * (M + 1));

  for (int i = 0; i < nx; ++i) values[i] = tp.y_initial(mesh[i]);

  std::vector<double> F(nx);
  for (int j = 1; j <= M; ++j) {
    const double t = grid[j];
    for (int i = 1; i < nx - 1; ++i) F[i] = tp.rhs(mesh[i], t);
    const std::span<const double> prev(values.data() + static_cast<std::size_t>(j - 1) * nx, nx);
    auto next = thomas_solve(assemble_step(mesh, t, k, tp.b, eps, F, prev, {tp.y_left(t), tp.y_right(t)}));
    std::copy(next.begin(), next.end(), values.begin() + static_cast<std::ptrdiff_t>(j) * nx);
  }
  return GridFunction(mesh, grid, std::move(values));
}

}  // namespace sppde
