#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sppde {

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

// Coefficient or source term on [0,1] x [0,T].
struct ScalarField2D {
  Fn2 fn;
  bool depends_on_x = true;

  double operator()(double x, double t) const { return fn(x, t); }
};

// How to sample a one-variable datum exactly at its jump.
enum class AtJump { Left, Right, Average };

// One-variable datum, smooth apart from an optional jump. At the jump point
// operator() follows the left branch (left-closed pieces).
class PiecewiseFn {
 public:
  PiecewiseFn() : PiecewiseFn([](double) { return 0.0; }) {}
  PiecewiseFn(Fn1 smooth);  // NOLINT(google-explicit-constructor)
  PiecewiseFn(double jump_at, Fn1 left, Fn1 right);

  double operator()(double x) const { return eval(x, AtJump::Left); }
  double eval(double x, AtJump at_jump) const;
  double left_limit(double x) const { return left_(x); }
  double right_limit(double x) const { return jump_at_ ? right_(x) : left_(x); }

  std::optional<double> jump_location() const { return jump_at_; }
  // right(d) - left(d), zero without a jump.
  double jump() const;

 private:
  std::optional<double> jump_at_;
  Fn1 left_;
  Fn1 right_;
};

enum class Family {
  BoundaryInitialCorner = 1,  // phi(0+) != g_L(0)
  InitialInterior = 2,        // phi jumps at x = d
  BoundaryInTime = 3,         // g_L jumps at t = d
};

struct DiscontinuitySpec {
  Family family;
  double location;   // d; 0 for the corner family
  double jump;       // phi(0+), [phi](d) or [g_L](d)
  double anchor_b0;  // b frozen at the jump point
};

// Closed-form data derivatives for the corner compatibility report. Any may be
// left empty; the report names whichever one it needed and did not find.
struct DataDerivatives {
  Fn1 phi_x, phi_xx, phi_xxxx;
  Fn1 gL_t, gL_tt, gR_t, gR_tt;
  Fn2 f_t, f_xx;
  Fn2 b_t, b_x, b_xx;
};

// u_t - eps u_xx + b u = f on (0,1) x (0,T] with u(x,0) = initial,
// u(0,t) = boundary_left, u(1,t) = boundary_right.
struct ProblemSpec {
  std::string name;
  ScalarField2D b;
  ScalarField2D f;
  PiecewiseFn initial;
  PiecewiseFn boundary_left;
  PiecewiseFn boundary_right;
  double T = 1.0;
  DiscontinuitySpec disc{Family::BoundaryInitialCorner, 0.0, 1.0, 0.0};
  DataDerivatives derivatives;
};

// Throws ConfigError when the family invariants fail on a sampled grid.
void validate(const ProblemSpec& spec);

// The regularised problem for y = u - singular_part.
struct TransformedProblem {
  ScalarField2D rhs;
  ScalarField2D b;
  Fn1 y_left;
  Fn1 y_right;
  Fn1 y_initial;
  Fn2 singular_part;
  double T;
};

double singular_part_eval(const ProblemSpec& spec, double eps, double x, double t);

TransformedProblem transform(const ProblemSpec& spec, double eps);

// The original discontinuous problem posed as-is (singular_part == 0).
// Jump samples: average of the one-sided limits for an initial jump, the new
// branch for a boundary jump in time.
TransformedProblem untransformed(const ProblemSpec& spec);

struct CompatCondition {
  std::string name;
  int order;
  double corner_x;
  double residual;
  double scale;  // 1 + sum of |terms|
  bool satisfied;
};

struct CompatReport {
  std::vector<CompatCondition> conditions;
  bool all_satisfied() const;
};

// Corner conditions at (0,0) and (1,0) up to `order` (0, 1 or 2). A condition
// holds when |residual| <= 1e-10 * scale. Throws CapabilityError naming the
// first missing derivative evaluator.
CompatReport check_compatibility(const ProblemSpec& spec, double eps, int order);

// Examples 1-4 of the reference test set, T = 1.
std::vector<ProblemSpec> builtin_examples();
ProblemSpec builtin_example(int index);

}  // namespace sppde
