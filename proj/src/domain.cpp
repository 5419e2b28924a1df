#include "iml/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace iml {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string join(const std::vector<double>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

CPoint slice(const CPoint& z, std::size_t offset, std::size_t count) {
  return CPoint(std::span<const cplx>(z.begin() + offset, count));
}

}  // namespace

std::string DomainDescriptor::tag() const {
  return std::visit(
      overloaded{
          [](const descriptor::UnitDisc&) { return std::string("unit-disc"); },
          [](const descriptor::Polydisc& p) { return "polydisc(" + join(p.radii) + ")"; },
          [](const descriptor::EuclideanBall& b) {
            std::ostringstream os;
            os << "euclidean-ball(n=" << b.dimension << ",r=" << b.radius << ")";
            return os.str();
          },
          [](const descriptor::Balanced& b) {
            if (!b.h) return std::string("balanced(?)");
            std::string s = "balanced(" + b.h->name();
            if (!b.h->params().empty()) s += "," + join(b.h->params());
            return s + ")";
          },
          [](const descriptor::Product& p) {
            return "product(" + (p.first ? p.first->tag() : "?") + "," +
                   (p.second ? p.second->tag() : "?") + ")";
          },
          [](const descriptor::Example3& e) {
            return "example3(K=" + std::to_string(e.params.K) +
                   ",J=" + std::to_string(e.params.J) + ")";
          },
      },
      spec);
}

DomainModel::DomainModel(std::size_t dimension, Margin margin, DomainDescriptor descriptor)
    : dimension_(dimension), margin_(std::move(margin)), descriptor_(std::move(descriptor)) {}

double DomainModel::margin(const CPoint& z) const {
  if (z.size() != dimension_) throw std::invalid_argument("point dimension does not match domain");
  return margin_(z);
}

DomainModel make_model_domain(const DomainDescriptor& desc) {
  return std::visit(
      overloaded{
          [&](const descriptor::UnitDisc&) {
            return DomainModel(1, [](const CPoint& z) { return 1.0 - std::abs(z[0]); }, desc);
          },
          [&](const descriptor::Polydisc& p) {
            if (p.radii.empty() || p.radii.size() > kMaxDimension)
              throw DomainError("polydisc needs between 1 and 8 radii");
            for (double r : p.radii)
              if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("polydisc radii must be positive");
            auto radii = p.radii;
            return DomainModel(
                radii.size(),
                [radii](const CPoint& z) {
                  double m = std::numeric_limits<double>::infinity();
                  for (std::size_t i = 0; i < radii.size(); ++i)
                    m = std::min(m, radii[i] - std::abs(z[i]));
                  return m;
                },
                desc);
          },
          [&](const descriptor::EuclideanBall& b) {
            if (b.dimension == 0 || b.dimension > kMaxDimension)
              throw DomainError("ball dimension out of range");
            if (!(b.radius > 0.0) || !std::isfinite(b.radius))
              throw DomainError("ball radius must be positive");
            const double r = b.radius;
            return DomainModel(b.dimension, [r](const CPoint& z) { return r - norm(z); }, desc);
          },
          [&](const descriptor::Balanced& b) {
            if (!b.h) throw DomainError("balanced domain requires a gauge h");
            auto h = *b.h;
            return DomainModel(h.dimension(),
                               [h](const CPoint& z) { return 1.0 - h(as_vector(z)); }, desc);
          },
          [&](const descriptor::Product& p) {
            if (!p.first || !p.second) throw DomainError("product needs two factors");
            auto a = std::make_shared<DomainModel>(make_model_domain(*p.first));
            auto b = std::make_shared<DomainModel>(make_model_domain(*p.second));
            const std::size_t na = a->dimension();
            const std::size_t nb = b->dimension();
            if (na + nb > kMaxDimension) throw DomainError("product dimension too large");
            return DomainModel(
                na + nb,
                [a, b, na, nb](const CPoint& z) {
                  return std::min(a->margin(slice(z, 0, na)), b->margin(slice(z, na, nb)));
                },
                desc);
          },
          [&](const descriptor::Example3& e) {
            std::shared_ptr<const Example3Domain> dom;
            try {
              dom = std::make_shared<const Example3Domain>(e.params);
            } catch (const std::invalid_argument& err) {
              throw DomainError(err.what());
            }
            return DomainModel(2, [dom](const CPoint& z) { return 1.0 - eval_psi(z, *dom); },
                               desc);
          },
      },
      desc.spec);
}

DomainDescriptor unit_disc() { return {descriptor::UnitDisc{}}; }
DomainDescriptor polydisc(std::vector<double> radii) {
  return {descriptor::Polydisc{std::move(radii)}};
}
DomainDescriptor euclidean_ball(std::size_t dimension, double radius) {
  return {descriptor::EuclideanBall{dimension, radius}};
}
DomainDescriptor balanced(MinkowskiFunctional h) { return {descriptor::Balanced{std::move(h)}}; }
DomainDescriptor product(DomainDescriptor first, DomainDescriptor second) {
  return {descriptor::Product{std::make_shared<const DomainDescriptor>(std::move(first)),
                              std::make_shared<const DomainDescriptor>(std::move(second))}};
}
DomainDescriptor example3(Example3Params params) {
  return {descriptor::Example3{std::move(params)}};
}

}  // namespace iml
