#pragma once

// Test-side helpers: seeded random rationals and polynomials, the lattice
// node function x(s) and the defining quotients of D_x and S_x evaluated
// directly at lattice nodes. None of this goes through OperatorTable.

#include <random>
#include <vector>

#include "lopq/lattice.hpp"
#include "lopq/poly.hpp"
#include "lopq/scalar.hpp"

namespace lopq::testing {

class RandomRationals {
 public:
  explicit RandomRationals(unsigned seed) : rng_(seed) {}

  Scalar next(long max_num = 9, long max_den = 7) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_scalar(num(rng_), den(rng_));
  }

  Scalar nonzero(long max_num = 9, long max_den = 7) {
    Scalar v;
    do {
      v = next(max_num, max_den);
    } while (is_zero(v));
    return v;
  }

  Poly poly(int degree) {
    std::vector<Scalar> c;
    for (int i = 0; i <= degree; ++i) c.push_back(next());
    return Poly(std::move(c));
  }

  int index(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

/// Lattices used across the identity suites.
inline std::vector<Lattice> sample_q_lattices() {
  return {Lattice::q_lattice(2, make_scalar(1, 3), make_scalar(5, 2)),
          Lattice::q_lattice(3, 0, 1),
          Lattice::q_lattice(make_scalar(1, 2), -2, make_scalar(-3, 4)),
          Lattice::q_lattice(make_scalar(7, 5), make_scalar(2, 7), 0)};
}

inline std::vector<Lattice> sample_quadratic_lattices() {
  return {Lattice::quadratic(1, 2, 3), Lattice::quadratic(2, 0, 0), Lattice::quadratic(0, 1, 0)};
}

inline std::vector<Lattice> sample_lattices() {
  auto out = sample_q_lattices();
  for (auto& l : sample_quadratic_lattices()) out.push_back(l);
  return out;
}

/// x at s = j/2. For q-lattices c1 = 1, c2 = m (only the product enters the
/// operators), and q^{j/2} = p^j keeps everything rational.
inline Scalar node(const Lattice& lattice, long j) {
  if (lattice.is_q()) {
    const auto& q = lattice.q_params();
    return pow(q.p, -j) + q.m * pow(q.p, j) + q.c3;
  }
  const auto& r = lattice.quadratic_params();
  const Scalar s = make_scalar(j, 2);
  return r.c4 * s * s + r.c5 * s + r.c6;
}

/// (f(x(s+1/2)) - f(x(s-1/2))) / (x(s+1/2) - x(s-1/2)) at s = j/2.
inline Scalar dx_quotient(const Lattice& lattice, const Poly& f, long j) {
  const Scalar hi = node(lattice, j + 1);
  const Scalar lo = node(lattice, j - 1);
  return (f(hi) - f(lo)) / (hi - lo);
}

/// (f(x(s+1/2)) + f(x(s-1/2))) / 2 at s = j/2.
inline Scalar sx_quotient(const Lattice& lattice, const Poly& f, long j) {
  return (f(node(lattice, j + 1)) + f(node(lattice, j - 1))) / 2;
}

/// Half-integer steps j where the quotient denominator is nonzero.
inline std::vector<long> good_nodes(const Lattice& lattice, int count) {
  std::vector<long> out;
  for (long j = -7; static_cast<int>(out.size()) < count && j < 60; ++j) {
    if (node(lattice, j + 1) != node(lattice, j - 1)) out.push_back(j);
  }
  return out;
}

}  // namespace lopq::testing
