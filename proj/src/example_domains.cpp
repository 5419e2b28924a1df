#include "iml/example_domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace iml {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();

// log(|d| / 4) without the square root; exact zero is a pole.
double log_quarter_modulus(cplx d) {
  const double n = std::norm(d);
  if (n > 0.0) return 0.5 * std::log(n) - std::log(4.0);
  return d == cplx{} ? kNegInf : std::log(std::abs(d) / 4.0);
}

// Distance from lambda to the real segment [0, s].
double distance_to_segment(cplx lambda, double s) {
  const double x = std::clamp(lambda.real(), 0.0, s);
  return std::abs(lambda - cplx{x, 0.0});
}

double sum_inverse_squares(int n) {
  double s = 0.0;
  for (int j = n; j >= 1; --j) s += 1.0 / (double(j) * j);
  return s;
}

}  // namespace

Example3Params Example3Params::with_defaults(int K, int J) {
  Example3Params p;
  p.K = K;
  p.J = J;
  p.rseq = dyadic_rseq(J);
  p.validate();
  return p;
}

void Example3Params::validate() const {
  if (K < 10) throw std::invalid_argument("example3: K must be >= 10");
  if (J < 10) throw std::invalid_argument("example3: J must be >= 10");
  if (rseq.size() != static_cast<std::size_t>(J))
    throw std::invalid_argument("example3: rseq must hold exactly J points");
  for (const cplx& r : rseq)
    if (r.real() != 0.0 || r.imag() < 0.0 || r.imag() > 0.5)
      throw std::invalid_argument("example3: r_j must lie on the segment [0, i/2]");
}

std::vector<cplx> dyadic_rseq(int count) {
  std::vector<cplx> out;
  out.reserve(count > 0 ? count : 0);
  for (int level = 0; static_cast<int>(out.size()) < count; ++level) {
    const double denom = std::ldexp(1.0, level);
    for (long odd = 1; odd < (1L << level) || (level == 0 && odd == 1); odd += 2) {
      out.emplace_back(0.0, 0.5 * static_cast<double>(odd) / denom);
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  return out;
}

double eval_u(cplx lambda, int K) {
  if (K < 1) throw std::invalid_argument("eval_u: K must be >= 1");
  double sum = 0.0;
  for (int k = K; k >= 1; --k) {
    const double term = log_quarter_modulus(lambda - 1.0 / k);
    if (term == kNegInf) return kNegInf;
    sum += term / (double(k) * k);
  }
  return sum;
}

double u_tail_bound(cplx lambda, int K) {
  // Discarded poles 1/k, k > K, lie in (0, 1/(K+1)].
  const double hi = std::abs(lambda) + 1.0 / (K + 1);
  const double hi_term = std::abs(std::log(hi / 4.0));
  double bound = kInf;
  const double d = distance_to_segment(lambda, 1.0 / (K + 1));
  if (d > 0.0) bound = std::max(std::abs(std::log(d / 4.0)), hi_term) / K;
  if (lambda.real() <= 0.0) {
    // |lambda - 1/k| >= 1/k, and sum_{k>K} log(4k)/k^2 <= (log(4K) + 1)/K.
    const double lo_part = (std::log(4.0 * K) + 1.0) / K;
    const double b = hi <= 4.0 ? lo_part : lo_part + hi_term / K;
    bound = std::min(bound, b);
  }
  return bound;
}

double eval_v(cplx lambda, const Example3Params& params) {
  double sum = 0.0;
  for (int j = params.J; j >= 1; --j) {
    const double u = eval_u(lambda / 2.0 - params.rseq[j - 1], params.K);
    if (u == kNegInf) return kNegInf;
    sum += u / (2.0 * j * j);
  }
  return sum;
}

double v_tail_bound(cplx lambda, const Example3Params& params) {
  double bound = 0.0;
  for (int j = params.J; j >= 1; --j)
    bound += u_tail_bound(lambda / 2.0 - params.rseq[j - 1], params.K) / (2.0 * j * j);
  // Terms j > J: |u(mu)| <= -u(0) whenever Re mu <= 0 and |mu| <= 3.
  const bool controlled = lambda.real() <= 0.0 && std::abs(lambda) / 2.0 + 0.5 <= 3.0;
  if (!controlled) return kInf;
  return bound + kMinusU0UpperBound / (2.0 * params.J);
}

Example3Domain::Example3Domain(Example3Params params) : params_(std::move(params)) {
  params_.validate();
  u_tail_ = (std::log(4.0 * params_.K) + 1.0) / params_.K;
  v_tail_ = u_tail_ * sum_inverse_squares(params_.J) / 2.0 + kMinusU0UpperBound / (2.0 * params_.J);
}

double eval_psi(const CPoint& z, const Example3Domain& dom) {
  if (z.size() != 2) throw std::invalid_argument("eval_psi: point must lie in C^2");
  const double r2 = std::abs(z[1]);
  if (r2 == 0.0) return 0.0;
  const double v = eval_v(z[0], dom.params());
  if (v == kNegInf) return 0.0;
  return r2 * std::exp(norm_sq(z) + v);
}

std::vector<SingularLine> singular_lines(const Example3Params& params) {
  std::vector<SingularLine> out;
  out.reserve(static_cast<std::size_t>(params.J) * params.K);
  for (int j = 1; j <= params.J; ++j)
    for (int k = 1; k <= params.K; ++k)
      out.push_back({j, k, 2.0 * (params.rseq[j - 1] + 1.0 / k)});
  return out;
}

SingularLine nearest_singular_line(const Example3Params& params, cplx target) {
  SingularLine best{0, 0, {}};
  double best_d = kInf;
  for (const SingularLine& line : singular_lines(params)) {
    const double d = std::abs(line.first_coordinate - target);
    if (d < best_d) {
      best_d = d;
      best = line;
    }
  }
  return best;
}

}  // namespace iml
