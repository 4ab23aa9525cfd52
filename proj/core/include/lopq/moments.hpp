#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lopq/lattice.hpp"
#include "lopq/operators.hpp"
#include "lopq/pearson.hpp"
#include "lopq/poly.hpp"
#include "lopq/scalar.hpp"

namespace lopq {

/// A functional u known through its first moments u_0..u_N, u_n = <u, z^n>.
///
/// Operators on functionals track how many moments they can still certify:
///   D_x u   : N + 2 moments (the n-th consumes u_0..u_{n-1})
///   S_x u   : N + 1 moments
///   f u     : N + 1 - deg f moments
///   u +/- v : the shorter of the two
class MomentSeq {
 public:
  /// Throws MomentLengthError when `moments` is empty.
  MomentSeq(Lattice lattice, std::vector<Scalar> moments);

  const Lattice& lattice() const { return lattice_; }
  std::span<const Scalar> moments() const { return moments_; }
  std::size_t size() const { return moments_.size(); }
  /// Highest moment index available.
  std::size_t max_degree() const { return moments_.size() - 1; }
  const Scalar& operator[](std::size_t n) const { return moments_[n]; }

  /// First `count` moments. Throws MomentLengthError if fewer exist.
  MomentSeq prefix(std::size_t count) const;

  MomentSeq& operator*=(const Scalar& factor);
  friend MomentSeq operator*(const Scalar& factor, MomentSeq u) { return u *= factor; }
  friend MomentSeq operator+(const MomentSeq& lhs, const MomentSeq& rhs);
  friend MomentSeq operator-(const MomentSeq& lhs, const MomentSeq& rhs);

  friend bool operator==(const MomentSeq& lhs, const MomentSeq& rhs) {
    return lhs.lattice_ == rhs.lattice_ && lhs.moments_ == rhs.moments_;
  }

 private:
  Lattice lattice_;
  std::vector<Scalar> moments_;
};

/// <u, f>. Throws MomentLengthError when deg f > N.
Scalar apply(const MomentSeq& u, const Poly& f);

/// <D_x u, z^n> = -<u, D_x z^n>.
MomentSeq dual_dx(OperatorTable& ops, const MomentSeq& u);
/// <S_x u, z^n> = <u, S_x z^n>.
MomentSeq dual_sx(OperatorTable& ops, const MomentSeq& u);
/// D_x^k u.
MomentSeq dual_dx_pow(OperatorTable& ops, MomentSeq u, std::size_t k);
/// S_x^k u.
MomentSeq dual_sx_pow(OperatorTable& ops, MomentSeq u, std::size_t k);
/// <f u, z^n> = <u, f z^n>.
MomentSeq mul(const Poly& f, const MomentSeq& u);

/// Moments u_0..u_N of the solution of D_x(phi u) = S_x(psi u) with u_0 = 1.
///
/// Projecting the equation on z^n gives <u, g_n> = 0 with
/// g_n = -phi D_x z^n - psi S_x z^n, a polynomial of degree n + 1 whose
/// leading coefficient is exactly -d_n. Each step therefore solves for
/// u_{n+1} and throws AdmissibilityError(n) when d_n = 0.
MomentSeq pearson_moments(OperatorTable& ops, const PearsonPair& pair, std::size_t N);
MomentSeq pearson_moments(const Lattice& lattice, const PearsonPair& pair, std::size_t N);

/// The projection polynomial g_n above, exposed for the d_n cross-check.
Poly pearson_projection(OperatorTable& ops, const PearsonPair& pair, std::size_t n);

/// det[u_{i+j}]_{i,j=0..n}. Needs 2n <= N.
Scalar hankel(const MomentSeq& u, std::size_t n);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

/// Recurrence coefficients P_{n+1} = (z - B_n) P_n - C_n P_{n-1}.
/// B holds B_0..B_{N-1}; C holds C_1..C_{N-1}.
struct TTRRCoeffs {
  std::vector<Scalar> B;
  std::vector<Scalar> C;

  std::size_t size() const { return B.size(); }
  /// C_n for 1 <= n < N.
  const Scalar& c_at(std::size_t n) const { return C.at(n - 1); }

  friend bool operator==(const TTRRCoeffs&, const TTRRCoeffs&) = default;
};

/// Independent oracle: Gram-Schmidt on 1, z, z^2, ... under (f, g) = <u, f g>,
/// then B_n = (z P_n, P_n) / (P_n, P_n) and C_n = (P_n, P_n) / (P_{n-1}, P_{n-1}).
/// With moments u_0..u_M it returns N = floor((M + 1) / 2) coefficients B.
/// Throws RegularityBreakError(n) at the first (P_n, P_n) = 0.
TTRRCoeffs ttrr_oracle(const MomentSeq& u);

/// The monic orthogonal polynomials P_0..P_K produced by the oracle,
/// K = floor(M / 2).
std::vector<Poly> gram_schmidt_polys(const MomentSeq& u);

}  // namespace lopq
