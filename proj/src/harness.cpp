#include "sppde/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include <omp.h>

#include "sppde/error.hpp"
#include "sppde/mesh.hpp"

namespace sppde {

std::vector<MeshPair> doubling_ladder(MeshPair start, int steps) {
  std::vector<MeshPair> out;
  for (int s = 0; s < steps; ++s) out.push_back({start.N << s, start.M << s});
  return out;
}

std::vector<MeshPair> default_ladder(Coupling coupling, int steps) {
  return coupling == Coupling::M16 ? doubling_ladder({256, 16}, steps) : doubling_ladder({64, 64}, steps);
}

std::vector<int> eps_exponents(int max_exponent) {
  std::vector<int> out(max_exponent + 1);
  for (int e = 0; e <= max_exponent; ++e) out[e] = e;
  return out;
}

void SweepConfig::validate(Family family) const {
  if (ladder.empty()) throw ConfigError("sweep: empty mesh ladder");
  if (eps_exponents.empty()) throw ConfigError("sweep: empty eps set");
  const int divisor = family == Family::InitialInterior ? 8 : 4;
  for (std::size_t s = 0; s < ladder.size(); ++s) {
    if (ladder[s].N % divisor != 0)
      throw ConfigError("sweep: N=" + std::to_string(ladder[s].N) + " not divisible by " + std::to_string(divisor));
    if (ladder[s].M < 1) throw ConfigError("sweep: M must be >= 1");
    if (s > 0 && !(ladder[s].N == 2 * ladder[s - 1].N && ladder[s].M == 2 * ladder[s - 1].M))
      throw ConfigError("sweep: ladder must double N and M at each step");
  }
  if (!(mu > 0.0 && mu <= 1.0)) throw ConfigError("sweep: mu must lie in (0,1]");
}

SpaceMesh family_mesh(const ProblemSpec& spec, int N, double eps, double mu) {
  if (spec.disc.family == Family::InitialInterior) return shishkin_q2(N, eps, spec.T, mu, spec.disc.location);
  return shishkin_q1(N, eps, spec.T, mu);
}

GridFunction solve_cell(const ProblemSpec& spec, double eps, int N, int M, const SweepConfig& cfg) {
  const TransformedProblem tp = cfg.subtract_singularity ? transform(spec, eps) : untransformed(spec);
  return solve_parabolic(tp, family_mesh(spec, N, eps, cfg.mu), uniform_time(M, spec.T), eps);
}

double two_mesh_difference(const ProblemSpec& spec, double eps, int N, int M, const SweepConfig& cfg) {
  const GridFunction coarse = solve_cell(spec, eps, N, M, cfg);
  const GridFunction fine = solve_cell(spec, eps, 2 * N, 2 * M, cfg);
  return max_diff(coarse, fine);
}

double order_of(double D, double D_next) {
  if (!(D > 0.0) || !(D_next > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::log2(D / D_next);
}

namespace {

std::vector<double> orders_of(const std::vector<double>& row) {
  std::vector<double> out;
  for (std::size_t c = 0; c + 1 < row.size(); ++c) out.push_back(order_of(row[c], row[c + 1]));
  return out;
}

ConvergenceTable empty_table(const ProblemSpec& spec, const SweepConfig& cfg) {
  cfg.validate(spec.disc.family);
  ConvergenceTable table;
  table.example = spec.name;
  table.family = static_cast<int>(spec.disc.family);
  table.subtract = cfg.subtract_singularity;
  table.ladder = cfg.ladder;
  table.eps_exponents = cfg.eps_exponents;
  table.D.assign(cfg.eps_exponents.size(), std::vector<double>(cfg.ladder.size(), 0.0));
  return table;
}

struct Cell {
  std::size_t row;
  std::size_t col;
};

std::string cell_label(const ConvergenceTable& table, const Cell& c) {
  return "eps=2^-" + std::to_string(table.eps_exponents[c.row]) + ", N=" + std::to_string(table.ladder[c.col].N) +
         ", M=" + std::to_string(table.ladder[c.col].M);
}

}  // namespace

std::vector<double> ConvergenceTable::orders(std::size_t row) const { return orders_of(D.at(row)); }

std::vector<double> ConvergenceTable::uniform_orders() const { return orders_of(uniform_D); }

void ConvergenceTable::finalize() {
  uniform_D.assign(ladder.size(), 0.0);
  for (const auto& row : D)
    for (std::size_t c = 0; c < row.size(); ++c) uniform_D[c] = std::max(uniform_D[c], row[c]);
}

ConvergenceTable uniform_sweep(const ProblemSpec& spec, const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ConvergenceTable table = empty_table(spec, cfg);

  // Largest cells first so the dynamic schedule finishes evenly.
  std::vector<Cell> cells;
  for (std::size_t c = table.ladder.size(); c-- > 0;)
    for (std::size_t r = 0; r < table.eps_exponents.size(); ++r) cells.push_back({r, c});

  std::exception_ptr failure;
  std::string failed_at;
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  const auto n_cells = static_cast<long>(cells.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long n = 0; n < n_cells; ++n) {
    const Cell cell = cells[n];
    try {
      const double eps = std::ldexp(1.0, -table.eps_exponents[cell.row]);
      const MeshPair mp = table.ladder[cell.col];
      table.D[cell.row][cell.col] = two_mesh_difference(spec, eps, mp.N, mp.M, cfg);
    } catch (...) {
#pragma omp critical(sppde_sweep_failure)
      if (!failure) {
        failure = std::current_exception();
        failed_at = cell_label(table, cell);
      }
    }
  }

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const std::exception& e) {
      throw std::runtime_error("sweep cell " + failed_at + " failed: " + e.what());
    }
  }
  table.finalize();
  table.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return table;
}

ConvergenceTable uniform_sweep_serial(const ProblemSpec& spec, const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ConvergenceTable table = empty_table(spec, cfg);
  for (std::size_t r = 0; r < table.eps_exponents.size(); ++r) {
    const double eps = std::ldexp(1.0, -table.eps_exponents[r]);
    for (std::size_t c = 0; c < table.ladder.size(); ++c) {
      try {
        table.D[r][c] = two_mesh_difference(spec, eps, table.ladder[c].N, table.ladder[c].M, cfg);
      } catch (const std::exception& e) {
        throw std::runtime_error("sweep cell " + cell_label(table, {r, c}) + " failed: " + e.what());
      }
    }
  }
  table.finalize();
  table.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return table;
}

FieldSample reconstruct_solution(const ProblemSpec& spec, double eps, const GridFunction& Y,
                                 std::span<const double> xs, std::span<const double> ts) {
  FieldSample out{{xs.begin(), xs.end()}, {ts.begin(), ts.end()}, {}};
  out.values.reserve(xs.size() * ts.size());
  for (double t : ts)
    for (double x : xs) out.values.push_back(singular_part_eval(spec, eps, x, t) + bilinear_eval(Y, x, t));
  return out;
}

FieldSample reconstruct_solution(const ProblemSpec& spec, double eps, const GridFunction& Y, int sample_nx,
                                 int sample_nt) {
  if (sample_nx < 2 || sample_nt < 2) throw ConfigError("reconstruct_solution: need at least 2 samples per axis");
  std::vector<double> xs(sample_nx), ts(sample_nt);
  const double T = Y.grid().final_time();
  for (int i = 0; i < sample_nx; ++i) xs[i] = static_cast<double>(i) / (sample_nx - 1);
  for (int j = 0; j < sample_nt; ++j) ts[j] = T * j / (sample_nt - 1);
  xs.back() = 1.0;
  ts.back() = T;
  return reconstruct_solution(spec, eps, Y, xs, ts);
}

FieldSample nodal_field(const GridFunction& Y) {
  const auto xs = Y.mesh().points();
  const auto ts = Y.grid().points();
  return {{xs.begin(), xs.end()}, {ts.begin(), ts.end()}, {Y.values().begin(), Y.values().end()}};
}

}  // namespace sppde
