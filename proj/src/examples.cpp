#include <string>

#include "sppde/error.hpp"
#include "sppde/problem.hpp"

namespace sppde {

namespace {

const Fn1 kZero1 = [](double) { return 0.0; };
const Fn2 kZero2 = [](double, double) { return 0.0; };

// phi(x) = (1-x)^2 with the jump at the corner (0,0).
void corner_initial_data(ProblemSpec& p) {
  p.initial = PiecewiseFn([](double x) { return (1.0 - x) * (1.0 - x); });
  p.derivatives.phi_x = [](double x) { return -2.0 * (1.0 - x); };
  p.derivatives.phi_xx = [](double) { return 2.0; };
  p.derivatives.phi_xxxx = kZero1;
}

void homogeneous_boundaries(ProblemSpec& p) {
  p.boundary_left = PiecewiseFn(kZero1);
  p.boundary_right = PiecewiseFn(kZero1);
  p.derivatives.gL_t = p.derivatives.gL_tt = kZero1;
  p.derivatives.gR_t = p.derivatives.gR_tt = kZero1;
}

// f = 4 x (1-x) t + t^2
void quadratic_source(ProblemSpec& p) {
  p.f = {[](double x, double t) { return 4.0 * x * (1.0 - x) * t + t * t; }, true};
  p.derivatives.f_t = [](double x, double t) { return 4.0 * x * (1.0 - x) + 2.0 * t; };
  p.derivatives.f_xx = [](double, double t) { return -8.0 * t; };
}

ProblemSpec example1() {
  ProblemSpec p;
  p.name = "example1";
  p.b = {[](double, double t) { return 1.0 + t; }, false};
  p.derivatives.b_t = [](double, double) { return 1.0; };
  p.derivatives.b_x = p.derivatives.b_xx = kZero2;
  quadratic_source(p);
  corner_initial_data(p);
  homogeneous_boundaries(p);
  p.T = 1.0;
  p.disc = {Family::BoundaryInitialCorner, 0.0, 1.0, 1.0};
  return p;
}

ProblemSpec example2() {
  ProblemSpec p = example1();
  p.name = "example2";
  p.b = {[](double x, double) { return 1.0 + 10.0 * x; }, true};
  p.derivatives.b_t = kZero2;
  p.derivatives.b_x = [](double, double) { return 10.0; };
  p.derivatives.b_xx = kZero2;
  return p;
}

ProblemSpec example3() {
  ProblemSpec p;
  p.name = "example3";
  constexpr double d = 0.5;
  p.b = {[](double x, double t) { return 1.0 + 10.0 * x * t; }, true};
  p.derivatives.b_t = [](double x, double) { return 10.0 * x; };
  p.derivatives.b_x = [](double, double t) { return 10.0 * t; };
  p.derivatives.b_xx = kZero2;
  quadratic_source(p);
  p.initial = PiecewiseFn(
      d, [](double x) { return -1.0 + (2.0 * x - 1.0) * (2.0 * x - 1.0); },
      [](double x) { return 1.0 - (2.0 * x - 1.0) * (2.0 * x - 1.0); });
  p.derivatives.phi_x = [](double x) { return (x <= d ? 4.0 : -4.0) * (2.0 * x - 1.0); };
  p.derivatives.phi_xx = [](double x) { return x <= d ? 8.0 : -8.0; };
  p.derivatives.phi_xxxx = kZero1;
  homogeneous_boundaries(p);
  p.T = 1.0;
  p.disc = {Family::InitialInterior, d, 2.0, 1.0};
  return p;
}

ProblemSpec example4() {
  ProblemSpec p;
  p.name = "example4";
  constexpr double d = 0.25;
  p.b = {[](double x, double) { return 1.0 + x; }, true};
  p.derivatives.b_t = kZero2;
  p.derivatives.b_x = [](double, double) { return 1.0; };
  p.derivatives.b_xx = kZero2;
  quadratic_source(p);
  p.initial = PiecewiseFn(kZero1);
  p.derivatives.phi_x = p.derivatives.phi_xx = p.derivatives.phi_xxxx = kZero1;
  homogeneous_boundaries(p);
  p.boundary_left = PiecewiseFn(d, kZero1, [](double) { return 0.5; });
  p.T = 1.0;
  p.disc = {Family::BoundaryInTime, d, 0.5, 1.0};
  return p;
}

}  // namespace

std::vector<ProblemSpec> builtin_examples() { return {example1(), example2(), example3(), example4()}; }

ProblemSpec builtin_example(int index) {
  switch (index) {
    case 1: return example1();
    case 2: return example2();
    case 3: return example3();
    case 4: return example4();
  }
  throw ConfigError("example: expected 1..4, got " + std::to_string(index));
}

}  // namespace sppde
