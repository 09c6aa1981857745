#pragma once

namespace sppde {

// Parameters of the singular function s(x,t) = exp(-b0 t) erf(x / (2 sqrt(eps t))).
// b0 is the reaction coefficient frozen at the point where the data jumps.
struct SingularParams {
  double eps;
  double b0;
  double T;

  SingularParams(double eps, double b0, double T);
};

// Error function, absolute error below 1e-14 for every finite z.
// erf(-z) == -erf(z) bitwise; |z| >= 6 returns +-1.
double erf(double z);

// s(x,t). At t = 0 returns the pointwise limit sign(x), with s(0,0) = 0.
double singular(double x, double t, const SingularParams& p);

struct SingularDerivatives {
  double s_x;
  double s_t;
  double s_xx;
};

// Closed-form first/second derivatives of s for t > 0. s_t is obtained from
// s_t = eps s_xx - b0 s, so the heat-type residual vanishes identically.
SingularDerivatives singular_derivatives(double x, double t, const SingularParams& p);

// s_n = t^n s and cs_n = t^n (1 - s).
double singular_n(double x, double t, int n, const SingularParams& p);
double complementary_n(double x, double t, int n, const SingularParams& p);

// e^{-b0 t} erfc(x / (2 sqrt(eps t))) = e^{-b0 t} - s. Solves the same
// homogeneous equation as s; vanishes at t = 0 for x > 0.
double decaying_complement(double x, double t, const SingularParams& p);

// Unit step, closed at the origin: H(0) = 1.
inline double heaviside(double x) { return x < 0.0 ? 0.0 : 1.0; }

// d^2/dt^2 of s_2 = t^2 s for x > 0, t > 0. Bounded on the quarter plane
// but discontinuous at the corner.
double s2_second_time_derivative(double x, double t, const SingularParams& p);

}  // namespace sppde
