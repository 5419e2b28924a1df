#include "iml/estimate.hpp"

#include <cstdio>

namespace iml {

CPoint AnalyticDisc::operator()(cplx zeta) const {
  CPoint out = center;
  cplx power{1.0, 0.0};
  for (const CVector& c : coeffs) {
    power *= zeta;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[i] * power;
  }
  return out;
}

CVector AnalyticDisc::derivative_at_origin() const {
  return coeffs.empty() ? CVector(center.size()) : coeffs.front();
}

std::string to_string(BoundKind kind) {
  return kind == BoundKind::OracleExact ? "oracle-exact" : "upper-bound";
}

std::string MetricEstimate::witness_summary() const {
  struct Visitor {
    std::string operator()(std::monostate) const { return "none"; }
    std::string operator()(const AnalyticDisc& d) const {
      return "disc(degree=" + std::to_string(d.degree()) + ")";
    }
    std::string operator()(const Decomposition& d) const {
      return "decomposition(m=" + std::to_string(d.parts.size()) + ")";
    }
    std::string operator()(const Chain& c) const {
      return "chain(m=" + std::to_string(c.points.empty() ? 0 : c.points.size() - 1) + ")";
    }
    std::string operator()(const std::string& s) const { return "oracle:" + s; }
  };
  return std::visit(Visitor{}, witness);
}

}  // namespace iml
