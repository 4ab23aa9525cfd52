#pragma once

#include <cstddef>
#include <vector>

#include "lopq/lattice.hpp"
#include "lopq/poly.hpp"
#include "lopq/scalar.hpp"

namespace lopq {

/// phi(z) = a z^2 + b z + c and psi(z) = d z + e in D_x(phi u) = S_x(psi u).
struct PearsonPair {
  Scalar a;
  Scalar b;
  Scalar c;
  Scalar d;
  Scalar e;

  /// Throws std::invalid_argument when phi and psi are both zero.
  static PearsonPair make(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e);
  /// Throws std::invalid_argument when deg phi > 2, deg psi > 1 or both vanish.
  static PearsonPair from_polys(const Poly& phi, const Poly& psi);

  Poly phi() const { return Poly({c, b, a}); }
  Poly psi() const { return Poly({e, d}); }

  friend bool operator==(const PearsonPair&, const PearsonPair&) = default;
};

/// d_n = phi'' gamma_n / 2 + psi' alpha_n for every integer n >= -1.
Scalar d_n(const Lattice& lattice, const PearsonPair& pair, long n);

/// q-lattices: e_n = phi'(c3) gamma_n + psi(c3) alpha_n.
/// Quadratic lattices: e_n = b n + e + 2 beta d n^2.
Scalar e_n(const Lattice& lattice, const PearsonPair& pair, long n);

/// d_{-1}..d_N and e_0..e_N.
struct DnEn {
  std::vector<Scalar> d;  // d[0] holds d_{-1}
  std::vector<Scalar> e;

  const Scalar& d_at(long n) const { return d.at(static_cast<std::size_t>(n + 1)); }
  const Scalar& e_at(long n) const { return e.at(static_cast<std::size_t>(n)); }
};

DnEn dn_en(const Lattice& lattice, const PearsonPair& pair, std::size_t N);

}  // namespace lopq
