#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lopq/lattice.hpp"
#include "lopq/moments.hpp"
#include "lopq/operators.hpp"
#include "lopq/pearson.hpp"
#include "lopq/poly.hpp"
#include "lopq/scalar.hpp"

namespace lopq {

// ---------------------------------------------------------------------------
// Iterated pairs

/// phi^[k](z) = a^[k] z^2 + b^[k] z + c^[k], psi^[k](z) = d^[k] z + e^[k].
struct IteratedPair {
  std::size_t k = 0;
  PearsonPair pair;

  Poly phi() const { return pair.phi(); }
  Poly psi() const { return pair.psi(); }

  friend bool operator==(const IteratedPair&, const IteratedPair&) = default;
};

enum class IterationPath {
  kRecurrence,  // apply S_x, D_x, U1, U2 step by step
  kClosedForm,  // evaluate the explicit coefficient formulas
};

IteratedPair iterate_pair(const Lattice& lattice, const PearsonPair& pair, std::size_t k,
                          IterationPath path = IterationPath::kClosedForm);

/// phi^[k], psi^[k] for k = 0..K. The recurrence path reuses each step.
std::vector<IteratedPair> iterate_pairs(const Lattice& lattice, const PearsonPair& pair,
                                        std::size_t K,
                                        IterationPath path = IterationPath::kClosedForm);

/// One recurrence step (phi^[k], psi^[k]) -> (phi^[k+1], psi^[k+1]).
PearsonPair iterate_step(OperatorTable& ops, const PearsonPair& pair);

/// Quadratic lattices only: the constant term of phi^[n] written as
/// phi(beta n^2) + 2 beta n psi(beta n^2) - (n/4)(16 beta c6 - c5^2) d_n.
Scalar quadratic_phi_constant(const Lattice& lattice, const PearsonPair& pair, std::size_t n);

/// d_n^[k] = a^[k] gamma_n + d^[k] alpha_n.
Scalar d_n_k(const Lattice& lattice, const PearsonPair& pair, long n, std::size_t k);

// ---------------------------------------------------------------------------
// Regularity

enum class FailureKind { kDnZero, kPhiKRoot };

const char* to_string(FailureKind kind);

struct Failure {
  long n = 0;
  FailureKind kind = FailureKind::kDnZero;

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Root of psi^[n]: c3 - e_n/d_{2n} on q-lattices, -beta n^2 - e_n/d_{2n}
/// on quadratic ones. Throws AdmissibilityError(2n) when d_{2n} = 0.
Scalar evaluation_point(const Lattice& lattice, const DnEn& de, std::size_t n);

/// Conditions d_k != 0 and phi^[n](evaluation_point(n)) != 0 for n <= N.
///
/// Scan order: for n = 0, 1, ..., N every d_k with k <= 2n not yet seen is
/// checked in increasing k, then phi^[n] at the evaluation point. A zero d_k
/// is reported as {k, d_n_zero}; a root is reported as {n, phi_k_root}.
struct RegularityReport {
  std::size_t N = 0;
  std::vector<Scalar> d_seq;      // d_{-1}..d_{2N}
  std::vector<Scalar> e_seq;      // e_0..e_N
  std::vector<Scalar> phi_values; // phi^[n](evaluation_point(n)) for the n reached
  /// Largest n with d_0..d_n all nonzero, scanning up to 2N; empty means all.
  std::optional<long> admissible_up_to;
  /// Largest n whose conditions (and all before) pass; empty means all.
  std::optional<long> regular_up_to;
  std::optional<Failure> first_failure;

  bool admissible() const { return !admissible_up_to.has_value(); }
  bool regular() const { return !first_failure.has_value(); }
  const Scalar& d_at(long n) const { return d_seq.at(static_cast<std::size_t>(n + 1)); }
};

RegularityReport regularity(const Lattice& lattice, const PearsonPair& pair, std::size_t N);

/// Thrown by gated operations whose regularity precondition fails.
class RegularityError : public std::domain_error {
 public:
  explicit RegularityError(Failure failure);
  const Failure& failure() const { return failure_; }

 private:
  Failure failure_;
};

// ---------------------------------------------------------------------------
// Recurrence coefficients

/// B_n from d_n, e_n. Needs d_{2n} (and d_{2n-2} when n >= 1) nonzero,
/// otherwise throws AdmissibilityError.
Scalar recurrence_b(const Lattice& lattice, const DnEn& de, std::size_t n);

/// C_{n+1} = -gamma_{n+1} d_{n-1} / (d_{2n-1} d_{2n+1}) phi^[n](point).
/// At n = 0 the d_{-1} factors cancel and C_1 = -phi(point_0) / d_1.
Scalar recurrence_c_next(const Lattice& lattice, const PearsonPair& pair, const DnEn& de,
                         std::size_t n);

/// B_0..B_{N-1} and C_1..C_{N-1} straight from the formulas; no regularity
/// gate, only nonzero denominators are required.
TTRRCoeffs ttrr_formulas(const Lattice& lattice, const PearsonPair& pair, std::size_t N);

/// As ttrr_formulas, but throws RegularityError unless regularity(N) passes.
TTRRCoeffs ttrr_coeffs(const Lattice& lattice, const PearsonPair& pair, std::size_t N);

/// Monic polynomials generated by a TTRR. P_0..P_N where N = ttrr.size().
class MonicOPS {
 public:
  explicit MonicOPS(TTRRCoeffs ttrr);

  const TTRRCoeffs& ttrr() const { return ttrr_; }
  const std::vector<Poly>& polys() const { return polys_; }
  const Poly& operator[](std::size_t n) const { return polys_.at(n); }
  std::size_t max_degree() const { return polys_.size() - 1; }

  /// P_n^[k] = (gamma_n! / gamma_{n+k}!) D_x^k P_{n+k}. Needs n + k <= N.
  Poly derived(OperatorTable& ops, std::size_t n, std::size_t k) const;

 private:
  TTRRCoeffs ttrr_;
  std::vector<Poly> polys_;
};

// ---------------------------------------------------------------------------
// Iterated functionals and Rodrigues

/// u^[k] from u^[0] = u and u^[j+1] = D_x(U2 psi^[j] u^[j]) - S_x(phi^[j] u^[j]).
/// Each step costs two moments when deg U2 = 2 (fewer on quadratic lattices).
MomentSeq u_k_moments(OperatorTable& ops, const PearsonPair& pair, const MomentSeq& u,
                      std::size_t k);

/// k_n = (-alpha)^{-n} prod_{j=1}^{n} 1 / d_{n+j-2}.
Scalar k_n(const Lattice& lattice, const PearsonPair& pair, std::size_t n);

struct RodriguesVerdict {
  std::size_t n = 0;
  std::size_t M = 0;
  bool equal = false;
  std::optional<std::size_t> first_mismatch;
  std::vector<Scalar> lhs;  // moments of P_n u
  std::vector<Scalar> rhs;  // moments of k_n D_x^n u^[n]
};

/// Compares moments 0..M of P_n u and k_n D_x^n u^[n], with u generated from
/// the pair and P_n from the recurrence formulas. Requires only that the
/// needed d_k are nonzero (AdmissibilityError otherwise).
RodriguesVerdict rodrigues_check(const Lattice& lattice, const PearsonPair& pair, std::size_t n,
                                 std::size_t M);

/// Coefficients of R_{n+1} = (a_n z - s_n) R_n - t_n R_{n-1}; t[0] is unused.
struct RSequenceCoeffs {
  std::vector<Scalar> a;
  std::vector<Scalar> s;
  std::vector<Scalar> t;
};

/// a_n, s_n, t_n for 0 <= n < N.
RSequenceCoeffs r_n_coefficients(const Lattice& lattice, const PearsonPair& pair, std::size_t N);

/// R_0..R_N.
std::vector<Poly> r_n_sequence(const Lattice& lattice, const PearsonPair& pair, std::size_t N);

}  // namespace lopq
