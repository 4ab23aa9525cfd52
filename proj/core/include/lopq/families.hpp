#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lopq/lattice.hpp"
#include "lopq/pearson.hpp"
#include "lopq/scalar.hpp"

namespace lopq {

/// Racah family on x(s) = s(s + a + b + 1).
struct RacahParams {
  Scalar a;
  Scalar b;
  Scalar c;
  Scalar d;
};

/// Askey-Wilson family on x(s) = c1 q^{-s} + c2 q^s + c3 with p = q^{1/2}
/// and r = sqrt(c1 c2), so the lattice product is m = r^2.
struct AWParams {
  Scalar a;
  Scalar b;
  Scalar c;
  Scalar d;
  Scalar p;
  Scalar r = 1;
  Scalar c3 = 0;
};

/// Lattice, Pearson pair and closed-form recurrence coefficients of a
/// named family. closed_b(n) gives B_n (n >= 0), closed_c(n) gives C_n
/// (n >= 1). Both throw std::domain_error where the closed form is undefined.
struct FamilyBundle {
  std::string name;
  Lattice lattice;
  PearsonPair pair;
  std::function<Scalar(std::size_t)> closed_b;
  std::function<Scalar(std::size_t)> closed_c;
};

FamilyBundle racah_bundle(const RacahParams& params);

/// Throws LatticeError for invalid p. closed_b throws when a = 0.
/// closed_b carries the prefactor r = sqrt(c1 c2) on its bracket.
FamilyBundle aw_bundle(const AWParams& params);

/// Quantities that must avoid the negative integers for the Racah functional
/// to be regular: a, c, d, d + c + 1, b + c, c + d - a, d - b.
std::vector<Scalar> racah_regularity_set(const RacahParams& params);

/// True when no entry of racah_regularity_set is a negative integer.
bool racah_regular(const RacahParams& params);

/// r^2 (1 - abcd q^n)(1 - ab q^n)(1 - ac q^n)(1 - ad q^n)(1 - bc q^n)(1 - bd q^n)(1 - cd q^n).
Scalar aw_regularity_product(const AWParams& params, std::size_t n);

/// True when x is in {-1, -2, ...}.
bool is_negative_integer(const Scalar& x);

}  // namespace lopq
