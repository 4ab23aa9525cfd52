#include "lopq/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lopq {

Poly::Poly(const Scalar& constant) {
  if (!lopq::is_zero(constant)) coeffs_.push_back(constant);
}

Poly::Poly(int constant) : Poly(Scalar(constant)) {}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(std::size_t n, const Scalar& coeff) {
  std::vector<Scalar> c(n + 1);
  c[n] = coeff;
  return Poly(std::move(c));
}

Poly Poly::linear_factor(const Scalar& slope, const Scalar& root) {
  return Poly({Scalar(-slope * root), slope});
}

Scalar Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

Scalar Poly::leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

Scalar Poly::operator()(const Scalar& z) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(out));
}

Poly Poly::compose_affine(const Scalar& scale, const Scalar& shift) const {
  // Horner in the polynomial ring: ((c_n) * w + c_{n-1}) * w + ...
  const Poly w({shift, scale});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * w;
    acc += Poly(*it);
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lopq::is_zero(lhs.coeffs_[i])) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Scalar& rhs) {
  if (lopq::is_zero(rhs)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Poly& Poly::operator/=(const Scalar& rhs) {
  if (lopq::is_zero(rhs)) throw std::domain_error("Poly: division by zero");
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

Poly operator-(Poly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && lopq::is_zero(coeffs_.back())) coeffs_.pop_back();
}

}  // namespace lopq
