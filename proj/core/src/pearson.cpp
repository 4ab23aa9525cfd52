#include "lopq/pearson.hpp"

#include <stdexcept>
#include <utility>

namespace lopq {

PearsonPair PearsonPair::make(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e) {
  PearsonPair pair{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e)};
  if (pair.phi().is_zero() && pair.psi().is_zero()) {
    throw std::invalid_argument("Pearson pair (phi, psi) must not be (0, 0)");
  }
  return pair;
}

PearsonPair PearsonPair::from_polys(const Poly& phi, const Poly& psi) {
  if (phi.degree() > 2) throw std::invalid_argument("phi must have degree <= 2");
  if (psi.degree() > 1) throw std::invalid_argument("psi must have degree <= 1");
  return make(phi.coeff(2), phi.coeff(1), phi.coeff(0), psi.coeff(1), psi.coeff(0));
}

Scalar d_n(const Lattice& lattice, const PearsonPair& pair, long n) {
  return pair.a * lattice.gamma_n(n) + pair.d * lattice.alpha_n(n);
}

Scalar e_n(const Lattice& lattice, const PearsonPair& pair, long n) {
  if (lattice.is_q()) {
    const Scalar& c3 = lattice.q_params().c3;
    const Scalar phi_prime = 2 * pair.a * c3 + pair.b;
    const Scalar psi_value = pair.d * c3 + pair.e;
    return phi_prime * lattice.gamma_n(n) + psi_value * lattice.alpha_n(n);
  }
  const Scalar nn = n;
  return pair.b * nn + pair.e + 2 * lattice.beta() * pair.d * nn * nn;
}

DnEn dn_en(const Lattice& lattice, const PearsonPair& pair, std::size_t N) {
  DnEn out;
  out.d.reserve(N + 2);
  out.e.reserve(N + 1);
  for (long n = -1; n <= static_cast<long>(N); ++n) out.d.push_back(d_n(lattice, pair, n));
  for (long n = 0; n <= static_cast<long>(N); ++n) out.e.push_back(e_n(lattice, pair, n));
  return out;
}

}  // namespace lopq
