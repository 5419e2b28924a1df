#include "iml/complex_types.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace iml {

template <class Tag>
CTuple<Tag>::CTuple(std::size_t n) : size_(n) {
  if (n == 0 || n > kMaxDimension)
    throw std::invalid_argument("dimension must be in [1, " + std::to_string(kMaxDimension) + "]");
}

template <class Tag>
CTuple<Tag>::CTuple(std::initializer_list<cplx> values)
    : CTuple(std::span<const cplx>(values.begin(), values.size())) {}

template <class Tag>
CTuple<Tag>::CTuple(std::span<const cplx> values) : CTuple(values.size()) {
  std::copy(values.begin(), values.end(), data_.begin());
  if (!is_finite()) throw std::invalid_argument("coordinates must be finite");
}

template <class Tag>
bool CTuple<Tag>::is_finite() const {
  return std::all_of(begin(), end(), [](const cplx& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

template <class Tag>
bool CTuple<Tag>::is_zero() const {
  return std::all_of(begin(), end(), [](const cplx& c) { return c == cplx{}; });
}

template <class Tag>
bool CTuple<Tag>::operator==(const CTuple& other) const {
  return size_ == other.size_ && std::equal(begin(), end(), other.begin());
}

template class CTuple<PointTag>;
template class CTuple<VectorTag>;

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

template <class Out, class A, class B, class Op>
Out zip(const A& a, const B& b, Op op) {
  require_same_size(a.size(), b.size());
  Out out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

}  // namespace

CPoint operator+(const CPoint& p, const CVector& v) {
  return zip<CPoint>(p, v, std::plus<cplx>{});
}
CPoint operator-(const CPoint& p, const CVector& v) {
  return zip<CPoint>(p, v, std::minus<cplx>{});
}
CVector operator-(const CPoint& a, const CPoint& b) {
  return zip<CVector>(a, b, std::minus<cplx>{});
}
CVector operator+(const CVector& a, const CVector& b) {
  return zip<CVector>(a, b, std::plus<cplx>{});
}
CVector operator-(const CVector& a, const CVector& b) {
  return zip<CVector>(a, b, std::minus<cplx>{});
}
CVector operator-(const CVector& a) {
  CVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}
CVector operator*(cplx s, const CVector& v) {
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}
CVector operator*(const CVector& v, cplx s) { return s * v; }
CVector operator/(const CVector& v, cplx s) {
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / s;
  return out;
}

CVector as_vector(const CPoint& p) {
  CVector v(p.size());
  std::copy(p.begin(), p.end(), v.begin());
  return v;
}

CPoint as_point(const CVector& v) {
  CPoint p(v.size());
  std::copy(v.begin(), v.end(), p.begin());
  return p;
}

CVector canonical_direction(const CVector& X, double* scale, cplx* phase) {
  const double s = norm(X);
  if (scale) *scale = s;
  if (s == 0.0) {
    if (phase) *phase = cplx{1.0, 0.0};
    return X;
  }
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < X.size(); ++i)
    if (std::abs(X[i]) > std::abs(X[pivot])) pivot = i;
  const cplx u = X[pivot] / std::abs(X[pivot]);
  if (phase) *phase = u;
  CVector d(X.size());
  const cplx f = std::conj(u) / s;
  for (std::size_t i = 0; i < X.size(); ++i) d[i] = X[i] * f;
  d[pivot] = cplx{std::abs(d[pivot]), 0.0};
  return d;
}

std::string to_string(cplx c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", c.real(), c.imag());
  return buf;
}

template <class Tag>
std::string to_string(const CTuple<Tag>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += to_string(x[i]);
  }
  return s + ")";
}

template std::string to_string(const CPoint&);
template std::string to_string(const CVector&);

}  // namespace iml
