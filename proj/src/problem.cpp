#include "sppde/problem.hpp"

#include <cmath>
#include <string>

#include "sppde/error.hpp"
#include "sppde/specialfn.hpp"

namespace sppde {

PiecewiseFn::PiecewiseFn(Fn1 smooth) : left_(std::move(smooth)) {}

PiecewiseFn::PiecewiseFn(double jump_at, Fn1 left, Fn1 right)
    : jump_at_(jump_at), left_(std::move(left)), right_(std::move(right)) {}

double PiecewiseFn::eval(double x, AtJump at_jump) const {
  if (!jump_at_) return left_(x);
  if (x < *jump_at_) return left_(x);
  if (x > *jump_at_) return right_(x);
  switch (at_jump) {
    case AtJump::Left: return left_(x);
    case AtJump::Right: return right_(x);
    case AtJump::Average: return 0.5 * (left_(x) + right_(x));
  }
  return left_(x);
}

double PiecewiseFn::jump() const { return jump_at_ ? right_(*jump_at_) - left_(*jump_at_) : 0.0; }

namespace {

constexpr double kDataTol = 1e-12;
constexpr int kSamples = 33;

bool near(double a, double b) { return std::fabs(a - b) <= kDataTol * (1.0 + std::fabs(a) + std::fabs(b)); }

void require(bool ok, const ProblemSpec& spec, const std::string& what) {
  if (!ok) throw ConfigError("problem '" + spec.name + "': " + what);
}

template <class F>
bool vanishes_on(const F& fn, double lo, double hi) {
  for (int i = 0; i < kSamples; ++i) {
    const double x = lo + (hi - lo) * i / (kSamples - 1);
    if (std::fabs(fn(x)) > kDataTol) return false;
  }
  return true;
}

SingularParams params_for(const ProblemSpec& spec, double eps) {
  return SingularParams(eps, spec.disc.anchor_b0, spec.T);
}

}  // namespace

void validate(const ProblemSpec& spec) {
  require(spec.T > 0.0, spec, "T must be > 0");
  require(spec.b.fn && spec.f.fn, spec, "b and f must be set");
  require(spec.disc.jump != 0.0, spec, "jump must be nonzero");
  require(spec.disc.anchor_b0 >= 0.0, spec, "anchor_b0 must be >= 0");
  for (int i = 0; i < kSamples; ++i)
    for (int j = 0; j < kSamples; ++j) {
      const double x = static_cast<double>(i) / (kSamples - 1);
      const double t = spec.T * j / (kSamples - 1);
      require(spec.b(x, t) >= 0.0, spec, "b must be >= 0 (fails at x=" + std::to_string(x) + ", t=" +
                                             std::to_string(t) + ")");
    }

  const auto& bl = spec.boundary_left;
  const auto& br = spec.boundary_right;
  const auto& phi = spec.initial;
  const double d = spec.disc.location;
  switch (spec.disc.family) {
    case Family::BoundaryInitialCorner:
      require(vanishes_on(bl, 0.0, spec.T), spec, "corner family needs g_L == 0");
      require(vanishes_on(br, 0.0, spec.T), spec, "corner family needs g_R == 0");
      require(near(phi(1.0), 0.0), spec, "corner family needs phi(1) = 0");
      require(near(phi.right_limit(0.0), spec.disc.jump), spec, "jump must equal phi(0+)");
      break;
    case Family::InitialInterior:
      require(d > 0.0 && d < 1.0, spec, "interior jump location must lie in (0,1)");
      require(phi.jump_location() && *phi.jump_location() == d, spec, "phi must jump at d");
      require(near(phi(0.0), 0.0) && near(phi.right_limit(1.0), 0.0), spec, "needs phi(0) = phi(1) = 0");
      require(vanishes_on(bl, 0.0, spec.T) && vanishes_on(br, 0.0, spec.T), spec, "needs g_L == g_R == 0");
      require(near(phi.jump(), spec.disc.jump), spec, "jump must equal phi(d+) - phi(d-)");
      break;
    case Family::BoundaryInTime:
      require(d > 0.0 && d < spec.T, spec, "boundary jump time must lie in (0,T)");
      require(bl.jump_location() && *bl.jump_location() == d, spec, "g_L must jump at d");
      require(vanishes_on(phi, 0.0, 1.0), spec, "boundary-jump family needs phi == 0");
      require(vanishes_on(br, 0.0, spec.T), spec, "boundary-jump family needs g_R == 0");
      require(near(bl.jump(), spec.disc.jump), spec, "jump must equal g_L(d+) - g_L(d-)");
      break;
  }
}

double singular_part_eval(const ProblemSpec& spec, double eps, double x, double t) {
  const SingularParams p = params_for(spec, eps);
  const double jump = spec.disc.jump;
  switch (spec.disc.family) {
    case Family::BoundaryInitialCorner: return jump * singular(x, t, p);
    case Family::InitialInterior: return 0.5 * jump * singular(x - spec.disc.location, t, p);
    case Family::BoundaryInTime: {
      const double lag = t - spec.disc.location;
      return lag < 0.0 ? 0.0 : jump * decaying_complement(x, lag, p);
    }
  }
  return 0.0;
}

TransformedProblem transform(const ProblemSpec& spec, double eps) {
  validate(spec);
  const SingularParams p = params_for(spec, eps);
  const double jump = spec.disc.jump;
  const double b0 = spec.disc.anchor_b0;
  const double d = spec.disc.location;

  Fn2 sing = [spec, eps](double x, double t) { return singular_part_eval(spec, eps, x, t); };
  // F = f - L[singular part]; L of the singular part is (b - b0) * singular part.
  ScalarField2D rhs{[f = spec.f, b = spec.b, sing, b0](double x, double t) {
                      return f(x, t) - (b(x, t) - b0) * sing(x, t);
                    },
                    true};

  TransformedProblem tp{rhs, spec.b, {}, {}, {}, sing, spec.T};
  const auto gL = spec.boundary_left;
  const auto gR = spec.boundary_right;
  const auto phi = spec.initial;

  switch (spec.disc.family) {
    case Family::BoundaryInitialCorner:
      tp.y_left = [gL, p, jump](double t) { return gL(t) - jump * singular(0.0, t, p); };
      tp.y_right = [gR, p, jump](double t) { return gR(t) - jump * singular(1.0, t, p); };
      // Initial trace of the singular part taken from x > 0, so y(0,0) = y(0+,0).
      tp.y_initial = [phi, jump](double x) { return phi.right_limit(x) - jump; };
      break;
    case Family::InitialInterior:
      tp.y_left = [gL, p, jump, d](double t) { return gL(t) - 0.5 * jump * singular(-d, t, p); };
      tp.y_right = [gR, p, jump, d](double t) { return gR(t) - 0.5 * jump * singular(1.0 - d, t, p); };
      tp.y_initial = [phi, jump, d](double x) {
        if (x == d) return phi.eval(x, AtJump::Average);
        return phi(x) - 0.5 * jump * (x < d ? -1.0 : 1.0);
      };
      break;
    case Family::BoundaryInTime:
      tp.y_left = [gL, sing](double t) { return gL.eval(t, AtJump::Right) - sing(0.0, t); };
      tp.y_right = [gR, p, jump, d](double t) {
        const double lag = t - d;
        return gR(t) - (lag < 0.0 ? 0.0 : jump * decaying_complement(1.0, lag, p));
      };
      tp.y_initial = [phi](double x) { return phi(x); };
      break;
  }
  return tp;
}

TransformedProblem untransformed(const ProblemSpec& spec) {
  validate(spec);
  const auto gL = spec.boundary_left;
  const auto gR = spec.boundary_right;
  const auto phi = spec.initial;
  TransformedProblem tp{spec.f,
                        spec.b,
                        [gL](double t) { return gL.eval(t, AtJump::Right); },
                        [gR](double t) { return gR.eval(t, AtJump::Right); },
                        [phi](double x) { return phi.eval(x, AtJump::Average); },
                        [](double, double) { return 0.0; },
                        spec.T};
  return tp;
}

bool CompatReport::all_satisfied() const {
  for (const auto& c : conditions)
    if (!c.satisfied) return false;
  return true;
}

namespace {

template <class F>
const F& need(const F& fn, const char* name) {
  if (!fn) throw CapabilityError(std::string("check_compatibility: missing derivative evaluator '") + name + "'");
  return fn;
}

CompatCondition make_condition(std::string name, int order, double x, std::initializer_list<double> terms) {
  double residual = 0.0;
  double scale = 1.0;
  for (double v : terms) {
    residual += v;
    scale += std::fabs(v);
  }
  return {std::move(name), order, x, residual, scale, std::fabs(residual) <= 1e-10 * scale};
}

}  // namespace

CompatReport check_compatibility(const ProblemSpec& spec, double eps, int order) {
  if (order < 0 || order > 2) throw ConfigError("check_compatibility: order must be 0, 1 or 2");
  const auto& d = spec.derivatives;
  // Fetch everything first so a missing evaluator fails before any output.
  if (order >= 1) {
    need(d.gL_t, "gL_t");
    need(d.gR_t, "gR_t");
    need(d.phi_xx, "phi_xx");
  }
  if (order >= 2) {
    need(d.phi_x, "phi_x");
    need(d.phi_xxxx, "phi_xxxx");
    need(d.gL_tt, "gL_tt");
    need(d.gR_tt, "gR_tt");
    need(d.f_t, "f_t");
    need(d.f_xx, "f_xx");
    need(d.b_t, "b_t");
    need(d.b_x, "b_x");
    need(d.b_xx, "b_xx");
  }

  CompatReport report;
  const double phi0 = spec.initial.right_limit(0.0);
  const double phi1 = spec.initial.left_limit(1.0);
  const double gL0 = spec.boundary_left(0.0);
  const double gR0 = spec.boundary_right(0.0);
  report.conditions.push_back(make_condition("phi(0+) = g_L(0)", 0, 0.0, {phi0, -gL0}));
  report.conditions.push_back(make_condition("phi(1-) = g_R(0)", 0, 1.0, {phi1, -gR0}));
  if (order >= 1) {
    report.conditions.push_back(make_condition("g_L'(0) - eps phi''(0+) + b(0,0) phi(0+) = f(0,0)", 1, 0.0,
                                               {d.gL_t(0.0), -eps * d.phi_xx(0.0), spec.b(0.0, 0.0) * phi0,
                                                -spec.f(0.0, 0.0)}));
    report.conditions.push_back(make_condition("g_R'(0) - eps phi''(1-) + b(1,0) phi(1-) = f(1,0)", 1, 1.0,
                                               {d.gR_t(0.0), -eps * d.phi_xx(1.0), spec.b(1.0, 0.0) * phi1,
                                                -spec.f(1.0, 0.0)}));
  }
  if (order >= 2) {
    for (double c : {0.0, 1.0}) {
      const double phi_c = c == 0.0 ? phi0 : phi1;
      const double Phi_t = (1.0 - c) * d.gL_t(0.0) + c * d.gR_t(0.0);
      const double Phi_tt = (1.0 - c) * d.gL_tt(0.0) + c * d.gR_tt(0.0);
      const double b = spec.b(c, 0.0);
      // (f - L Phi)_t + (f - L Phi)_xx with Phi = phi + linear boundary lift.
      report.conditions.push_back(make_condition(
          c == 0.0 ? "(f - L Phi)_t + (f - L Phi)_xx = 0 at (0,0)" : "(f - L Phi)_t + (f - L Phi)_xx = 0 at (1,0)", 2,
          c,
          {d.f_t(c, 0.0), d.f_xx(c, 0.0), -Phi_tt, -d.b_t(c, 0.0) * phi_c, -b * Phi_t, eps * d.phi_xxxx(c),
           -d.b_xx(c, 0.0) * phi_c, -2.0 * d.b_x(c, 0.0) * d.phi_x(c), -b * d.phi_xx(c)}));
    }
  }
  return report;
}

}  // namespace sppde
