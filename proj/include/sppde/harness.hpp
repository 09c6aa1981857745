#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sppde/interp.hpp"
#include "sppde/problem.hpp"

namespace sppde {

struct MeshPair {
  int N;
  int M;
  friend bool operator==(const MeshPair&, const MeshPair&) = default;
};

enum class Coupling { M16, Equal };

// M16: (256,16) ... (4096,256); Equal: (64,64) ... (1024,1024).
std::vector<MeshPair> default_ladder(Coupling coupling, int steps = 5);
std::vector<MeshPair> doubling_ladder(MeshPair start, int steps);

// eps = 2^-e for e = 0..max_exponent.
std::vector<int> eps_exponents(int max_exponent = 30);

struct SweepConfig {
  std::vector<MeshPair> ladder = default_ladder(Coupling::M16);
  std::vector<int> eps_exponents = sppde::eps_exponents();
  double mu = 1.0;
  bool subtract_singularity = true;
  int threads = 0;  // 0: OpenMP default

  // Ladder doubles N and M at each step; N divisible by 4 (8 for an interior jump).
  void validate(Family family) const;
};

// Q1 for the corner and boundary-in-time families, Q2 around d for an interior jump.
SpaceMesh family_mesh(const ProblemSpec& spec, int N, double eps, double mu);

// Y on (N,M): the y-problem, or u itself when subtraction is off.
GridFunction solve_cell(const ProblemSpec& spec, double eps, int N, int M, const SweepConfig& cfg);

// || Y^{N,M} - Y^{2N,2M} || over the union of both tensor grids.
double two_mesh_difference(const ProblemSpec& spec, double eps, int N, int M, const SweepConfig& cfg);

// log2(D / D_next); quiet NaN when either input is not positive.
double order_of(double D, double D_next);

struct ConvergenceTable {
  std::string example;
  int family = 1;
  bool subtract = true;
  std::vector<MeshPair> ladder;
  std::vector<int> eps_exponents;
  std::vector<std::vector<double>> D;  // [eps row][ladder column]
  std::vector<double> uniform_D;       // max over rows, per column
  double wall_seconds = 0.0;

  std::vector<double> orders(std::size_t row) const;
  std::vector<double> uniform_orders() const;
  // Recompute uniform_D from D.
  void finalize();
};

// Every (eps, N, M) cell as an independent OpenMP task.
ConvergenceTable uniform_sweep(const ProblemSpec& spec, const SweepConfig& cfg);
// Same table, cells in order on the calling thread.
ConvergenceTable uniform_sweep_serial(const ProblemSpec& spec, const SweepConfig& cfg);

struct FieldSample {
  std::vector<double> x;
  std::vector<double> t;
  std::vector<double> values;  // values[j * x.size() + i]
};

// singular_part + bilinear(Y) at the tensor points xs x ts.
FieldSample reconstruct_solution(const ProblemSpec& spec, double eps, const GridFunction& Y,
                                 std::span<const double> xs, std::span<const double> ts);
// Uniform sample_nx x sample_nt points covering [0,1] x [0,T].
FieldSample reconstruct_solution(const ProblemSpec& spec, double eps, const GridFunction& Y, int sample_nx,
                                 int sample_nt);
// Y itself at its own nodes.
FieldSample nodal_field(const GridFunction& Y);

// CSV columns: example,family,subtract,eps_exponent,N,M,D,P. The uniform row
// carries eps_exponent "uniform". D is written with 17 significant digits.
void write_csv(const ConvergenceTable& table, std::ostream& os);
ConvergenceTable read_csv(std::istream& is);
// Aligned text, D and P rows per eps, 4 significant digits.
std::string format_table(const ConvergenceTable& table);

void write_field_csv(const FieldSample& field, std::ostream& os);

}  // namespace sppde
