#pragma once

#include <vector>

#include "iml/complex_types.hpp"

// The pseudoconvex domain D = {psi < 1} in C^2 with
//   u(l)   = sum_k  k^-2 log(|l - 1/k| / 4),
//   v(l)   = sum_j  u(l/2 - r_j) / (2 j^2),
//   psi(z) = |z2| exp(||z||^2 + v(z1)),
// where (r_j) is dense in the segment [0, i/2]. Both series are truncated
// (K terms of u, J terms of v). Every discarded term is <= 0 as long as the
// argument of u stays within distance 3 of the origin, so on |z1| <= 5 the
// truncated psi dominates the exact one and the truncated domain sits inside D.

namespace iml {

struct Example3Params {
  int K = 200;
  int J = 60;
  /// r_1..r_J on the segment from 0 to i/2.
  std::vector<cplx> rseq;

  static Example3Params with_defaults(int K = 200, int J = 60);
  void validate() const;
};

/// Dyadic points (i/2) * odd / 2^level, level by level: i/2, i/4, i/8, 3i/8, ...
std::vector<cplx> dyadic_rseq(int count);

/// Truncated u; returns -infinity exactly at the poles l = 1/k, k <= K.
double eval_u(cplx lambda, int K);

/// Bound on |u(l) - eval_u(l, K)|. Infinite when l lies on the pole segment (0, 1/K].
double u_tail_bound(cplx lambda, int K);

/// Truncated v; -infinity on {l : l/2 - r_j = 1/k, j <= J, k <= K}.
double eval_v(cplx lambda, const Example3Params& params);

/// Bound on |v(l) - eval_v(l)| for the exact v built from the same first J terms and
/// any continuation with r_j on the segment.
double v_tail_bound(cplx lambda, const Example3Params& params);

/// -u(0) = (pi^2/6) log 4 - zeta'(2), rounded up.
inline constexpr double kMinusU0UpperBound = 3.2180;

class Example3Domain {
 public:
  explicit Example3Domain(Example3Params params);

  const Example3Params& params() const { return params_; }
  /// Uniform tail bound of u over {|l| <= 3, Re l <= 0}.
  double u_tail_bound() const { return u_tail_; }
  /// Uniform tail bound of v over {|l| <= 5, Re l <= 0}.
  double v_tail_bound() const { return v_tail_; }

 private:
  Example3Params params_;
  double u_tail_;
  double v_tail_;
};

/// |z2| exp(||z||^2 + v(z1)); exactly 0 when z2 = 0 or v(z1) = -infinity.
double eval_psi(const CPoint& z, const Example3Domain& dom);

/// First coordinates 2 (r_j + 1/k) of the vertical lines {psi = 0}.
struct SingularLine {
  int j;
  int k;
  cplx first_coordinate;
};
std::vector<SingularLine> singular_lines(const Example3Params& params);

/// The singular line whose first coordinate is closest to `target`.
SingularLine nearest_singular_line(const Example3Params& params, cplx target);

}  // namespace iml
