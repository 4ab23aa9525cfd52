#pragma once

#include <climits>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lopq/scalar.hpp"

namespace lopq {

/// Dense polynomial in z over exact rationals, coefficients stored low to
/// high. Trailing zeros are always trimmed, so the zero polynomial holds no
/// coefficients and reports degree kZeroDegree.
class Poly {
 public:
  /// Stand-in for -infinity. Compares below every real degree, so
  /// `p.degree() <= n` reads naturally for the zero polynomial too.
  static constexpr int kZeroDegree = INT_MIN;

  Poly() = default;
  Poly(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant);            // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(std::initializer_list<Scalar> coeffs);

  static Poly monomial(std::size_t n, const Scalar& coeff = 1);
  /// f(z) = slope * (z - root).
  static Poly linear_factor(const Scalar& slope, const Scalar& root);

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of z^i; zero past the degree.
  Scalar coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Scalar leading() const;
  std::span<const Scalar> coeffs() const { return coeffs_; }

  Scalar operator()(const Scalar& z) const;

  /// Ordinary derivative d/dz.
  Poly derivative() const;
  /// f(scale * z + shift).
  Poly compose_affine(const Scalar& scale, const Scalar& shift) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Scalar& rhs);
  Poly& operator/=(const Scalar& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Scalar& lhs, Poly rhs) { return rhs *= lhs; }
  friend Poly operator/(Poly lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend Poly operator-(Poly p);

  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

/// The polynomial z.
inline Poly z_poly() { return Poly::monomial(1); }

}  // namespace lopq
