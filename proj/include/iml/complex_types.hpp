#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

namespace iml {

using cplx = std::complex<double>;

/// Storage capacity of the fixed-size coordinate tuples.
inline constexpr std::size_t kMaxDimension = 8;

/// Fixed-capacity tuple of complex numbers tagged by its geometric role.
/// Points (CPoint) and tangent vectors (CVector) share storage but not arithmetic.
template <class Tag>
class CTuple {
 public:
  CTuple() = default;

  /// Zero tuple of length n.
  explicit CTuple(std::size_t n);
  CTuple(std::initializer_list<cplx> values);
  explicit CTuple(std::span<const cplx> values);

  std::size_t size() const { return size_; }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }

  cplx* begin() { return data_.data(); }
  cplx* end() { return data_.data() + size_; }
  const cplx* begin() const { return data_.data(); }
  const cplx* end() const { return data_.data() + size_; }
  std::span<const cplx> values() const { return {data_.data(), size_}; }

  bool is_finite() const;
  bool is_zero() const;

  bool operator==(const CTuple& other) const;

 private:
  std::array<cplx, kMaxDimension> data_{};
  std::size_t size_ = 0;
};

struct PointTag {};
struct VectorTag {};

using CPoint = CTuple<PointTag>;
using CVector = CTuple<VectorTag>;

extern template class CTuple<PointTag>;
extern template class CTuple<VectorTag>;

// Affine arithmetic: point +/- vector is a point, point - point is a vector.
CPoint operator+(const CPoint& p, const CVector& v);
CPoint operator-(const CPoint& p, const CVector& v);
CVector operator-(const CPoint& a, const CPoint& b);

CVector operator+(const CVector& a, const CVector& b);
CVector operator-(const CVector& a, const CVector& b);
CVector operator-(const CVector& a);
CVector operator*(cplx s, const CVector& v);
CVector operator*(const CVector& v, cplx s);
CVector operator/(const CVector& v, cplx s);

template <class Tag>
double norm_sq(const CTuple<Tag>& x) {
  double s = 0.0;
  for (const cplx& c : x) s += std::norm(c);
  return s;
}

template <class Tag>
double norm(const CTuple<Tag>& x) {
  return std::sqrt(norm_sq(x));
}

/// Hermitian product sum_i a_i conj(b_i).
template <class TagA, class TagB>
cplx hermitian(const CTuple<TagA>& a, const CTuple<TagB>& b) {
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

CVector as_vector(const CPoint& p);
CPoint as_point(const CVector& v);

/// Unit vector with the phase of its first largest-modulus component removed.
/// Every nonzero multiple lambda*X maps to the same direction up to rounding.
/// `scale` receives ||X||, `phase` receives the removed unit factor (X = scale*phase*dir).
CVector canonical_direction(const CVector& X, double* scale = nullptr, cplx* phase = nullptr);

std::string to_string(cplx c);
template <class Tag>
std::string to_string(const CTuple<Tag>& x);

}  // namespace iml
