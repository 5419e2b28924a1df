#include "iml/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace iml {

namespace {

double moebius(cplx a, cplx b) { return std::abs((a - b) / (1.0 - std::conj(a) * b)); }

void check_dims(const OracleDomainTag& tag, std::size_t a, std::size_t b) {
  if (a != tag.dimension || b != tag.dimension)
    throw std::invalid_argument("oracle: dimension mismatch for " + tag.name());
}

void require_origin(const OracleDomainTag& tag, const CPoint& z) {
  if (!z.is_zero())
    throw std::domain_error("oracle: " + tag.name() + " is only available at the origin");
}

MetricEstimate exact(double value, const OracleDomainTag& tag) {
  MetricEstimate est;
  est.value = value;
  est.kind = BoundKind::OracleExact;
  est.witness = tag.name();
  return est;
}

void require_interior(bool inside, const OracleDomainTag& tag) {
  if (!inside) throw OutsideDomain("oracle: point outside " + tag.name());
}

}  // namespace

std::string OracleDomainTag::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::UnitDisc:
      return "unit-disc";
    case Kind::Polydisc:
      os << "polydisc(";
      for (std::size_t i = 0; i < radii.size(); ++i) os << (i ? "," : "") << radii[i];
      os << ")";
      return os.str();
    case Kind::EuclideanBall:
      os << "euclidean-ball(n=" << dimension << ",r=" << radius << ")";
      return os.str();
    case Kind::BalancedAtOrigin:
      return "balanced-at-origin(" + (h ? h->name() : std::string("?")) + ")";
  }
  return "?";
}

std::optional<OracleDomainTag> oracle_tag_for(const DomainDescriptor& desc) {
  OracleDomainTag tag;
  if (std::holds_alternative<descriptor::UnitDisc>(desc.spec)) {
    tag.kind = OracleDomainTag::Kind::UnitDisc;
    tag.dimension = 1;
    return tag;
  }
  if (const auto* p = std::get_if<descriptor::Polydisc>(&desc.spec)) {
    tag.kind = OracleDomainTag::Kind::Polydisc;
    tag.radii = p->radii;
    tag.dimension = p->radii.size();
    return tag;
  }
  if (const auto* b = std::get_if<descriptor::EuclideanBall>(&desc.spec)) {
    tag.kind = OracleDomainTag::Kind::EuclideanBall;
    tag.dimension = b->dimension;
    tag.radius = b->radius;
    return tag;
  }
  if (const auto* b = std::get_if<descriptor::Balanced>(&desc.spec)) {
    if (!b->h) return std::nullopt;
    tag.kind = OracleDomainTag::Kind::BalancedAtOrigin;
    tag.dimension = b->h->dimension();
    tag.h = b->h;
    return tag;
  }
  return std::nullopt;
}

MetricEstimate oracle_kappa(const OracleDomainTag& tag, const CPoint& z, const CVector& X) {
  check_dims(tag, z.size(), X.size());
  switch (tag.kind) {
    case OracleDomainTag::Kind::UnitDisc: {
      const double r2 = std::norm(z[0]);
      require_interior(r2 < 1.0, tag);
      return exact(std::abs(X[0]) / (1.0 - r2), tag);
    }
    case OracleDomainTag::Kind::Polydisc: {
      double v = 0.0;
      for (std::size_t i = 0; i < tag.dimension; ++i) {
        const double r = tag.radii[i];
        const double zi = std::abs(z[i]);
        require_interior(zi < r, tag);
        v = std::max(v, std::abs(X[i]) * r / (r * r - zi * zi));
      }
      return exact(v, tag);
    }
    case OracleDomainTag::Kind::EuclideanBall: {
      // kappa_{rB}(z; X) = kappa_B(z/r; X/r).
      const double r = tag.radius;
      const double s = 1.0 - norm_sq(z) / (r * r);
      require_interior(s > 0.0, tag);
      const double x2 = norm_sq(X) / (r * r);
      const double zx2 = std::norm(hermitian(X, z)) / (r * r * r * r);
      return exact(std::sqrt(x2 / s + zx2 / (s * s)), tag);
    }
    case OracleDomainTag::Kind::BalancedAtOrigin:
      require_origin(tag, z);
      return exact((*tag.h)(X), tag);
  }
  throw std::logic_error("unreachable");
}

MetricEstimate oracle_lempert(const OracleDomainTag& tag, const CPoint& z, const CPoint& w) {
  check_dims(tag, z.size(), w.size());
  switch (tag.kind) {
    case OracleDomainTag::Kind::UnitDisc:
      require_interior(std::abs(z[0]) < 1.0 && std::abs(w[0]) < 1.0, tag);
      return exact(moebius(z[0], w[0]), tag);
    case OracleDomainTag::Kind::Polydisc: {
      double v = 0.0;
      for (std::size_t i = 0; i < tag.dimension; ++i) {
        const double r = tag.radii[i];
        require_interior(std::abs(z[i]) < r && std::abs(w[i]) < r, tag);
        v = std::max(v, moebius(z[i] / r, w[i] / r));
      }
      return exact(v, tag);
    }
    case OracleDomainTag::Kind::EuclideanBall: {
      const double r2 = tag.radius * tag.radius;
      const double sz = 1.0 - norm_sq(z) / r2;
      const double sw = 1.0 - norm_sq(w) / r2;
      require_interior(sz > 0.0 && sw > 0.0, tag);
      if (z == w) return exact(0.0, tag);
      // |1-<w,z>|^2 - (1-|z|^2)(1-|w|^2) = |d|^2 - (|z|^2 |d|^2 - |<d,z>|^2), d = w - z,
      // which stays accurate as w -> z.
      const CVector d = w - z;
      const double d2 = norm_sq(d) / r2;
      const double gram = norm_sq(z) / r2 * d2 - std::norm(hermitian(d, z)) / (r2 * r2);
      const double denom = std::norm(1.0 - hermitian(w, z) / r2);
      const double v = std::sqrt(std::max(0.0, (d2 - gram) / denom));
      return exact(std::min(v, 1.0), tag);
    }
    case OracleDomainTag::Kind::BalancedAtOrigin: {
      require_origin(tag, z);
      const double v = (*tag.h)(as_vector(w));
      require_interior(v < 1.0, tag);
      return exact(v, tag);
    }
  }
  throw std::logic_error("unreachable");
}

MetricFn kappa_oracle_fn(const OracleDomainTag& tag) {
  return [tag](const CPoint& z, const CVector& X) { return oracle_kappa(tag, z, X).value; };
}

LempertFn lempert_oracle_fn(const OracleDomainTag& tag) {
  return [tag](const CPoint& z, const CPoint& w) { return oracle_lempert(tag, z, w).value; };
}

}  // namespace iml
