#include "sppde/specialfn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sppde/error.hpp"

namespace sppde {

namespace {

// W. J. Cody, "Rational Chebyshev approximations for the error function",
// Math. Comp. 23 (1969). Three ranges: |x| <= 0.46875, <= 4, > 4.
constexpr double kA[5] = {3.16112374387056560e00, 1.13864154151050156e02, 3.77485237685302021e02,
                          3.20937758913846947e03, 1.85777706184603153e-1};
constexpr double kB[4] = {2.36012909523441209e01, 2.44024637934444173e02, 1.28261652607737228e03,
                          2.84423683343917062e03};
constexpr double kC[9] = {5.64188496988670089e-1, 8.88314979438837594e00, 6.61191906371416295e01,
                          2.98635138197400131e02, 8.81952221241769090e02, 1.71204761263407058e03,
                          2.05107837782607147e03, 1.23033935479799725e03, 2.15311535474403846e-8};
constexpr double kD[8] = {1.57449261107098347e01, 1.17693950891312499e02, 5.37181101862009858e02,
                          1.62138957456669019e03, 3.29079923573345963e03, 4.36261909014324716e03,
                          3.43936767414372164e03, 1.23033935480374942e03};
constexpr double kP[6] = {3.05326634961232344e-1, 3.60344899949804439e-1, 1.25781726111229246e-1,
                          1.60837851487422766e-2, 6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr double kQ[5] = {2.56852019228982242e00, 1.87295284992346047e00, 5.27905102951428412e-1,
                          6.05183413124413191e-2, 2.33520497626869185e-3};

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kSaturation = 6.0;

// exp(-y*y) without losing the low bits of y*y.
double gaussian_tail(double y) {
  const double ysq = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ysq) * (y + ysq);
  return std::exp(-ysq * ysq) * std::exp(-del);
}

// erf for y >= 0.
double erf_nonnegative(double y) {
  if (y <= 0.46875) {
    const double ysq = y > 1.11e-16 ? y * y : 0.0;
    double num = kA[4] * ysq;
    double den = ysq;
    for (int i = 0; i < 3; ++i) {
      num = (num + kA[i]) * ysq;
      den = (den + kB[i]) * ysq;
    }
    return y * (num + kA[3]) / (den + kB[3]);
  }
  if (y >= kSaturation) return 1.0;

  double erfc = 0.0;
  if (y <= 4.0) {
    double num = kC[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
      num = (num + kC[i]) * y;
      den = (den + kD[i]) * y;
    }
    erfc = gaussian_tail(y) * (num + kC[7]) / (den + kD[7]);
  } else {
    const double ysq = 1.0 / (y * y);
    double num = kP[5] * ysq;
    double den = ysq;
    for (int i = 0; i < 4; ++i) {
      num = (num + kP[i]) * ysq;
      den = (den + kQ[i]) * ysq;
    }
    const double r = ysq * (num + kP[4]) / (den + kQ[4]);
    erfc = gaussian_tail(y) * (kInvSqrtPi - r) / y;
  }
  return 1.0 - erfc;
}

void require_time(double t, const char* what) {
  if (!(t >= 0.0)) throw DomainError(std::string(what) + ": t must be >= 0, got " + std::to_string(t));
}

}  // namespace

SingularParams::SingularParams(double eps_, double b0_, double T_) : eps(eps_), b0(b0_), T(T_) {
  if (!(eps > 0.0)) throw DomainError("SingularParams: eps must be > 0");
  if (!(b0 >= 0.0)) throw DomainError("SingularParams: b0 must be >= 0");
  if (!(T > 0.0)) throw DomainError("SingularParams: T must be > 0");
}

double erf(double z) {
  if (!std::isfinite(z)) throw DomainError("erf: non-finite argument");
  const double v = erf_nonnegative(std::fabs(z));
  return std::signbit(z) ? -v : v;
}

double singular(double x, double t, const SingularParams& p) {
  require_time(t, "singular");
  if (t == 0.0) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    return 0.0;
  }
  return std::exp(-p.b0 * t) * erf(x / (2.0 * std::sqrt(p.eps * t)));
}

SingularDerivatives singular_derivatives(double x, double t, const SingularParams& p) {
  if (!(t > 0.0)) throw DomainError("singular_derivatives: t must be > 0");
  const double et = p.eps * t;
  const double decay = std::exp(-p.b0 * t);
  const double s_x = decay / std::sqrt(std::numbers::pi * et) * std::exp(-x * x / (4.0 * et));
  const double s_xx = -x / (2.0 * et) * s_x;
  const double s = decay * erf(x / (2.0 * std::sqrt(et)));
  return {s_x, p.eps * s_xx - p.b0 * s, s_xx};
}

double singular_n(double x, double t, int n, const SingularParams& p) {
  if (n < 0) throw DomainError("singular_n: n must be >= 0");
  const double s = singular(x, t, p);
  return n == 0 ? s : std::pow(t, n) * s;
}

double complementary_n(double x, double t, int n, const SingularParams& p) {
  if (n < 0) throw DomainError("complementary_n: n must be >= 0");
  const double cs = 1.0 - singular(x, t, p);
  return n == 0 ? cs : std::pow(t, n) * cs;
}

double decaying_complement(double x, double t, const SingularParams& p) {
  const double s = singular(x, t, p);  // validates t
  return std::exp(-p.b0 * t) - s;
}

double s2_second_time_derivative(double x, double t, const SingularParams& p) {
  if (!(x > 0.0) || !(t > 0.0)) throw DomainError("s2_second_time_derivative: needs x > 0 and t > 0");
  const double root = std::sqrt(p.eps * t);
  const double z = x / (2.0 * root);
  const double decay = std::exp(-p.b0 * t);
  const double bt = p.b0 * t;
  // Product rule on (t^2 e^{-b0 t}) * erf(z(t)) with z_t = -z / (2t).
  const double smooth = 2.0 * (1.0 - 2.0 * bt + 0.5 * bt * bt);
  const double gauss = (4.0 * bt * x / root - 5.0 * x / root - x * x * x / (2.0 * p.eps * t * root)) /
                       (4.0 * std::sqrt(std::numbers::pi)) * std::exp(-z * z);
  return decay * (gauss + smooth * erf(z));
}

}  // namespace sppde
