#pragma once

#include <span>
#include <vector>

#include "sppde/solver.hpp"

namespace sppde {

// Sorted merge of two point sets; points within 2^-48 (relative) of each
// other are merged.
std::vector<double> merge_points(std::span<const double> a, std::span<const double> b);

struct UnionMesh {
  std::vector<double> x;
  std::vector<double> t;
};

UnionMesh union_mesh(const GridFunction& a, const GridFunction& b);

// Tensor-product linear interpolant of g at (x,t). Exact at grid nodes.
// Throws DomainError outside [0,1] x [0,T].
double bilinear_eval(const GridFunction& g, double x, double t);

// max over union-mesh nodes of |bilinear(a) - bilinear(b)|. Brackets are
// precomputed per axis and time rows are split across OpenMP threads.
double max_diff(const GridFunction& a, const GridFunction& b);

// Reference for max_diff: one bilinear_eval per node, single thread.
double max_diff_serial(const GridFunction& a, const GridFunction& b);

}  // namespace sppde
