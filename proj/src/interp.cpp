#include "sppde/interp.hpp"

#include <algorithm>
#include <cmath>

#include "sppde/error.hpp"

namespace sppde {

namespace {

constexpr double kMergeTol = 0x1p-48;

struct Bracket {
  int cell;
  double w;
};

Bracket locate(std::span<const double> pts, double x) {
  const auto it = std::upper_bound(pts.begin(), pts.end(), x);
  int cell = static_cast<int>(it - pts.begin()) - 1;
  cell = std::clamp(cell, 0, static_cast<int>(pts.size()) - 2);
  const double lo = pts[cell];
  const double hi = pts[cell + 1];
  return {cell, (x - lo) / (hi - lo)};
}

double interpolate(const GridFunction& g, Bracket bx, Bracket bt) {
  const int i = bx.cell;
  const int j = bt.cell;
  const double lower = (1.0 - bx.w) * g.value(j, i) + bx.w * g.value(j, i + 1);
  const double upper = (1.0 - bx.w) * g.value(j + 1, i) + bx.w * g.value(j + 1, i + 1);
  return (1.0 - bt.w) * lower + bt.w * upper;
}

void check_same_domain(const GridFunction& a, const GridFunction& b) {
  if (a.grid().final_time() != b.grid().final_time())
    throw DomainError("max_diff: grid functions have different T");
}

}  // namespace

std::vector<double> merge_points(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  const auto last = std::unique(out.begin(), out.end(), [](double p, double q) {
    return std::fabs(p - q) <= kMergeTol * std::max(std::fabs(p), std::fabs(q));
  });
  out.erase(last, out.end());
  return out;
}

UnionMesh union_mesh(const GridFunction& a, const GridFunction& b) {
  return {merge_points(a.mesh().points(), b.mesh().points()), merge_points(a.grid().points(), b.grid().points())};
}

double bilinear_eval(const GridFunction& g, double x, double t) {
  const auto xs = g.mesh().points();
  const auto ts = g.grid().points();
  if (!(x >= xs.front() && x <= xs.back()) || !(t >= ts.front() && t <= ts.back()))
    throw DomainError("bilinear_eval: point outside [0,1] x [0,T]");
  return interpolate(g, locate(xs, x), locate(ts, t));
}

double max_diff(const GridFunction& a, const GridFunction& b) {
  check_same_domain(a, b);
  const UnionMesh u = union_mesh(a, b);
  const auto nx = static_cast<int>(u.x.size());
  const auto nt = static_cast<int>(u.t.size());

  std::vector<Bracket> ax(nx), bx(nx), at(nt), bt(nt);
  for (int i = 0; i < nx; ++i) {
    ax[i] = locate(a.mesh().points(), u.x[i]);
    bx[i] = locate(b.mesh().points(), u.x[i]);
  }
  for (int j = 0; j < nt; ++j) {
    at[j] = locate(a.grid().points(), u.t[j]);
    bt[j] = locate(b.grid().points(), u.t[j]);
  }

  double result = 0.0;
#pragma omp parallel for schedule(static) reduction(max : result)
  for (int j = 0; j < nt; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double diff = std::fabs(interpolate(a, ax[i], at[j]) - interpolate(b, bx[i], bt[j]));
      result = std::max(result, diff);
    }
  }
  return result;
}

double max_diff_serial(const GridFunction& a, const GridFunction& b) {
  check_same_domain(a, b);
  const UnionMesh u = union_mesh(a, b);
  double result = 0.0;
  for (double t : u.t)
    for (double x : u.x) result = std::max(result, std::fabs(bilinear_eval(a, x, t) - bilinear_eval(b, x, t)));
  return result;
}

}  // namespace sppde
