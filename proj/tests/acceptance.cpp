// Acceptance gate: one PASS/FAIL line per criterion.
// Usage: sppde_acceptance [criterion ...]   (default: all)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sppde/harness.hpp"
#include "sppde/mesh.hpp"
#include "sppde/solver.hpp"
#include "sppde/specialfn.hpp"

using namespace sppde;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "!") + what;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool rel_ok(double got, double want, double tol) { return std::fabs(got - want) <= tol * std::fabs(want); }

// cache: each table is swept once
std::map<std::string, ConvergenceTable> g_tables;

const ConvergenceTable& table(int example, bool subtract, Coupling coupling) {
  const std::string key = std::to_string(example) + (subtract ? "s" : "n") + (coupling == Coupling::M16 ? "m" : "e");
  auto it = g_tables.find(key);
  if (it != g_tables.end()) return it->second;
  SweepConfig cfg;
  cfg.ladder = default_ladder(coupling);
  cfg.subtract_singularity = subtract;
  auto t = uniform_sweep(builtin_example(example), cfg);
  std::fprintf(stderr, "  [example %d %s %s: %.1f s]\n", example, subtract ? "subtract" : "naive",
               coupling == Coupling::M16 ? "M16" : "equal", t.wall_seconds);
  return g_tables.emplace(key, std::move(t)).first->second;
}

void check_row(Verdict& v, const std::vector<double>& got, const std::vector<double>& want, double tol) {
  for (std::size_t c = 0; c < want.size(); ++c)
    v.require(rel_ok(got[c], want[c], tol), "D" + std::to_string(c) + "=" + fmt("%.4E", got[c]) + " vs " + fmt("%.3E", want[c]));
}

void check_orders(Verdict& v, const std::vector<double>& got, const std::vector<double>& want, double tol) {
  for (std::size_t c = 0; c < want.size(); ++c)
    v.require(std::fabs(got[c] - want[c]) <= tol, "P" + std::to_string(c) + "=" + fmt("%.4f", got[c]) + " vs " + fmt("%.3f", want[c]));
}

std::size_t row_of(const ConvergenceTable& t, int e) {
  for (std::size_t r = 0; r < t.eps_exponents.size(); ++r)
    if (t.eps_exponents[r] == e) return r;
  return 0;
}

std::size_t col_of(const ConvergenceTable& t, MeshPair mp) {
  for (std::size_t c = 0; c < t.ladder.size(); ++c)
    if (t.ladder[c] == mp) return c;
  return 0;
}

Verdict criterion1() {
  Verdict v;
  const auto& t = table(1, true, Coupling::M16);
  check_row(v, t.uniform_D, {1.295e-2, 6.990e-3, 3.650e-3, 1.870e-3, 9.453e-4}, 0.01);
  check_orders(v, t.uniform_orders(), {0.890, 0.938, 0.965, 0.984}, 0.02);
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto& t = table(1, true, Coupling::Equal);
  check_row(v, t.uniform_D, {4.972e-2, 2.548e-2, 1.117e-2, 3.983e-3, 1.330e-3}, 0.01);
  const double last = t.uniform_orders().back();
  v.require(last >= 1.55, "final P=" + fmt("%.4f", last) + " >= 1.55");
  return v;
}

Verdict criterion3() {
  Verdict v;
  const auto& t = table(2, true, Coupling::M16);
  check_row(v, t.uniform_D, {1.092e-2, 5.531e-3, 2.787e-3, 1.400e-3, 7.016e-4}, 0.01);
  for (double p : t.uniform_orders()) v.require(p >= 0.97 && p <= 1.01, "P=" + fmt("%.4f", p) + " in [0.97,1.01]");
  return v;
}

Verdict criterion4() {
  Verdict v;
  const auto& t = table(3, false, Coupling::M16);
  const auto P = t.uniform_orders();
  for (std::size_t c = 2; c < 5; ++c)
    v.require(t.uniform_D[c] >= 0.498 && t.uniform_D[c] <= 0.500, "D" + std::to_string(c) + "=" + fmt("%.8f", t.uniform_D[c]) + " in [0.498,0.500]");
  for (std::size_t c = 2; c < 4; ++c) v.require(std::fabs(P[c]) <= 0.01, "|P" + std::to_string(c) + "|=" + fmt("%.2e", std::fabs(P[c])));
  return v;
}

Verdict criterion5() {
  Verdict v;
  const auto& t = table(3, true, Coupling::M16);
  check_row(v, t.uniform_D, {3.134e-2, 1.266e-2, 4.588e-3, 2.134e-3, 1.066e-3}, 0.02);
  check_orders(v, {t.uniform_orders().back()}, {1.001}, 0.02);
  return v;
}

Verdict criterion6() {
  Verdict v;
  const auto& t = table(4, false, Coupling::M16);
  check_row(v, t.uniform_D, {0.25, 0.25, 0.25, 0.25, 0.25}, 0.001);
  check_orders(v, t.uniform_orders(), {0.0, 0.0, 0.0, 0.0}, 0.005);
  return v;
}

Verdict criterion7() {
  Verdict v;
  const auto& t = table(4, true, Coupling::M16);
  check_row(v, t.uniform_D, {1.063e-2, 5.280e-3, 2.631e-3, 1.313e-3, 6.559e-4}, 0.01);
  check_orders(v, t.uniform_orders(), {1.010, 1.005, 1.003, 1.001}, 0.02);
  return v;
}

// --- property suite ---

double erf_error() {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double z = -6.0 + 12.0 * i / 9999.0;
    worst = std::max(worst, static_cast<double>(std::fabs(static_cast<long double>(sppde::erf(z)) - oracle::erf_series(z))));
  }
  return worst;
}

double pde_residual() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(-1.0, 1.0), ut(1e-6, 1.0), ue(-30.0, 0.0), ub(0.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SingularParams p(std::exp2(ue(rng)), ub(rng), 1.0);
    const double x = ux(rng), t = ut(rng);
    const auto d = singular_derivatives(x, t, p);
    worst = std::max(worst, std::fabs(d.s_t - p.eps * d.s_xx + p.b0 * singular(x, t, p)));
  }
  return worst;
}

double thomas_error() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> un(1, 64);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = un(rng);
    TridiagonalSystem s(n);
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      s.sub[i] = i > 0 ? u(rng) : 0.0;
      s.super[i] = i + 1 < n ? u(rng) : 0.0;
      s.diag[i] = std::fabs(s.sub[i]) + std::fabs(s.super[i]) + 0.1 + std::fabs(u(rng));
      s.rhs[i] = 10 * u(rng);
      A[i][i] = s.diag[i];
      if (i > 0) A[i][i - 1] = s.sub[i];
      if (i + 1 < n) A[i][i + 1] = s.super[i];
    }
    const auto x = thomas_solve(s);
    const auto ref = oracle::dense_solve(A, s.rhs);
    double scale = 0.0, err = 0.0;
    for (int i = 0; i < n; ++i) {
      scale = std::max(scale, std::fabs(ref[i]));
      err = std::max(err, std::fabs(x[i] - ref[i]));
    }
    worst = std::max(worst, err / scale);
  }
  return worst;
}

int max_principle_violations() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const double eps = std::exp2(-30.0 * u(rng));
    const double a = u(rng), c = 3 * u(rng), w = 10 * u(rng), l = u(rng), r = u(rng), b1 = 5 * u(rng);
    TransformedProblem tp;
    tp.T = 1.0;
    tp.b = {[b1](double x, double t) { return 0.5 + b1 * x * t; }, true};
    tp.rhs = {[a, c, w](double x, double t) { return a + c * std::pow(std::sin(w * x + t), 2); }, true};
    tp.y_left = [l](double t) { return l * t; };
    tp.y_right = [r](double t) { return r * t * t; };
    tp.y_initial = [](double) { return 0.0; };
    tp.singular_part = [](double, double) { return 0.0; };
    const int N = 16 << (trial % 4);
    const auto mesh = trial % 2 ? shishkin_q1(N, eps, 1.0) : shishkin_q2(N, eps, 1.0, 1.0, 0.5);
    const auto g = solve_parabolic(tp, mesh, uniform_time(4 + trial, 1.0), eps);
    for (double y : g.values())
      if (y < 0.0) {
        ++bad;
        break;
      }
  }
  return bad;
}

TransformedProblem manufactured(const Fn2& u, const Fn2& u_t, const Fn2& u_xx) {
  TransformedProblem tp;
  tp.T = 1.0;
  tp.b = {[](double, double) { return 1.0; }, false};
  tp.rhs = {[=](double x, double t) { return u_t(x, t) - u_xx(x, t) + u(x, t); }, true};
  tp.y_left = [u](double t) { return u(0.0, t); };
  tp.y_right = [u](double t) { return u(1.0, t); };
  tp.y_initial = [u](double x) { return u(x, 0.0); };
  tp.singular_part = [](double, double) { return 0.0; };
  return tp;
}

double nodal_error(const GridFunction& g, const Fn2& u) {
  double e = 0.0;
  for (int j = 0; j < g.nt(); ++j)
    for (int i = 0; i < g.nx(); ++i) e = std::max(e, std::fabs(g.value(j, i) - u(g.mesh()[i], g.grid()[j])));
  return e;
}

std::vector<double> mms_orders(bool in_time) {
  constexpr double pi = 3.14159265358979323846;
  const Fn2 ut_u = [](double x, double t) { return std::exp(-t) * x * (1 - x); };
  const Fn2 ut_t = [ut_u](double x, double t) { return -ut_u(x, t); };
  const Fn2 ut_xx = [](double, double t) { return -2 * std::exp(-t); };
  const Fn2 ux_u = [](double x, double t) { return (1 + t) * std::sin(pi * x); };
  const Fn2 ux_t = [](double x, double) { return std::sin(pi * x); };
  const Fn2 ux_xx = [pi](double x, double t) { return -pi * pi * (1 + t) * std::sin(pi * x); };
  const auto tp = in_time ? manufactured(ut_u, ut_t, ut_xx) : manufactured(ux_u, ux_t, ux_xx);
  std::vector<double> err;
  for (int n : {8, 16, 32, 64}) {
    const auto mesh = shishkin_q1(in_time ? 16 : n, 1.0, 1.0);
    const auto g = solve_parabolic(tp, mesh, uniform_time(in_time ? n : 4, 1.0), 1.0);
    err.push_back(nodal_error(g, in_time ? ut_u : ux_u));
  }
  std::vector<double> P;
  for (std::size_t i = 0; i + 1 < err.size(); ++i) P.push_back(std::log2(err[i] / err[i + 1]));
  return P;
}

double continuity_gap() {
  double worst = 0.0;
  for (int e : {1, 2, 3, 4}) {
    const auto spec = builtin_example(e);
    for (int k = 0; k <= 30; ++k) {
      const auto tp = transform(spec, std::ldexp(1.0, -k));
      for (double t0 : {0.0, 1e-300, 1e-14}) {
        worst = std::max(worst, std::fabs(tp.y_initial(0.0) - tp.y_left(t0)));
        worst = std::max(worst, std::fabs(tp.y_initial(1.0) - tp.y_right(t0)));
      }
    }
  }
  return worst;
}

Verdict criterion8() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const double e1 = erf_error();
  v.require(e1 <= 1e-13, "erf err=" + fmt("%.2e", e1));
  const double e2 = pde_residual();
  v.require(e2 <= 1e-12, "s residual=" + fmt("%.2e", e2));
  const double e3 = thomas_error();
  v.require(e3 <= 1e-12, "thomas rel err=" + fmt("%.2e", e3));
  const int e4 = max_principle_violations();
  v.require(e4 == 0, "max principle violations=" + std::to_string(e4));
  for (double p : mms_orders(true)) v.require(std::fabs(p - 1.0) <= 0.15, "MMS time P=" + fmt("%.3f", p));
  for (double p : mms_orders(false)) v.require(std::fabs(p - 2.0) <= 0.15, "MMS space P=" + fmt("%.3f", p));
  const double e6 = continuity_gap();
  v.require(e6 <= 1e-12, "continuity gap=" + fmt("%.2e", e6));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < 60.0, "time=" + fmt("%.2f", secs) + " s");
  return v;
}

Verdict criterion9() {
  Verdict v;
  {
    const auto& t = table(1, true, Coupling::M16);
    const double D = t.D[row_of(t, 14)][col_of(t, {512, 32})];
    v.require(rel_ok(D, 4.011e-3, 0.02), "T1(2^-14,512,32)=" + fmt("%.4E", D) + " vs 4.011E-03");
  }
  {
    const auto& t = table(3, true, Coupling::M16);
    const double D = t.D[row_of(t, 15)][col_of(t, {256, 16})];
    v.require(rel_ok(D, 3.134e-2, 0.02), "T5(2^-15,256,16)=" + fmt("%.4E", D) + " vs 3.134E-02");
  }
  {
    const auto& t = table(4, true, Coupling::M16);
    const double D = t.D[row_of(t, 30)][col_of(t, {4096, 256})];
    v.require(rel_ok(D, 6.559e-4, 0.02), "T8(2^-30,4096,256)=" + fmt("%.4E", D) + " vs 6.559E-04");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!wanted.empty() && !wanted.count(id)) continue;
    const Verdict v = criteria[k]();
    std::printf("CRITERION %d: %s  %s\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
