#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "lopq/poly.hpp"
#include "lopq/scalar.hpp"

namespace lopq {

/// x(s) = c1 q^{-s} + c2 q^s + c3, parametrized by p = q^{1/2} and the
/// product m = c1 c2 (nothing in scope needs c1, c2 separately).
struct QLatticeParams {
  Scalar p;
  Scalar c3;
  Scalar m;

  friend bool operator==(const QLatticeParams&, const QLatticeParams&) = default;
};

/// x(s) = c4 s^2 + c5 s + c6.
struct QuadraticLatticeParams {
  Scalar c4;
  Scalar c5;
  Scalar c6;

  friend bool operator==(const QuadraticLatticeParams&, const QuadraticLatticeParams&) = default;
};

using LatticeSpec = std::variant<QLatticeParams, QuadraticLatticeParams>;

enum class LatticeKind { kQQuadratic, kQLinear, kQuadratic, kLinear };

const char* to_string(LatticeKind kind);

struct LatticeConstants {
  Scalar alpha;
  Scalar beta;
  Scalar delta;
  Poly u1;  // degree <= 1
  Poly u2;  // degree <= 2
};

/// alpha_n, beta_n, gamma_n for 0 <= n <= N. The entries at index -1 follow
/// the conventions alpha_{-1} = alpha and gamma_{-1} = -1.
struct LatticeSequences {
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;
  std::vector<Scalar> gamma;
  Scalar alpha_minus_one;
  Scalar gamma_minus_one;

  std::size_t size() const { return alpha.size(); }
  /// Index n in [-1, N].
  const Scalar& alpha_at(long n) const;
  const Scalar& gamma_at(long n) const;
};

/// A validated lattice together with its constants. Immutable.
class Lattice {
 public:
  /// Throws LatticeError unless p > 0 and p != 1.
  static Lattice q_lattice(Scalar p, Scalar c3, Scalar m);
  /// Throws LatticeError when (c4, c5) = (0, 0).
  static Lattice quadratic(Scalar c4, Scalar c5, Scalar c6);
  static Lattice from_spec(const LatticeSpec& spec);

  const LatticeSpec& spec() const { return spec_; }
  bool is_q() const { return std::holds_alternative<QLatticeParams>(spec_); }
  LatticeKind kind() const;

  const QLatticeParams& q_params() const { return std::get<QLatticeParams>(spec_); }
  const QuadraticLatticeParams& quadratic_params() const {
    return std::get<QuadraticLatticeParams>(spec_);
  }

  const LatticeConstants& constants() const { return constants_; }
  const Scalar& alpha() const { return constants_.alpha; }
  const Scalar& beta() const { return constants_.beta; }
  const Scalar& delta() const { return constants_.delta; }
  const Poly& u1() const { return constants_.u1; }
  const Poly& u2() const { return constants_.u2; }

  /// Closed forms, valid for every integer n (n = -1 reproduces the
  /// conventions alpha_{-1} = alpha, gamma_{-1} = -1).
  Scalar alpha_n(long n) const;
  Scalar gamma_n(long n) const;

  /// gamma_1 gamma_2 ... gamma_n, with gamma_0! = 1.
  Scalar gamma_factorial(std::size_t n) const;

  friend bool operator==(const Lattice& lhs, const Lattice& rhs) { return lhs.spec_ == rhs.spec_; }

 private:
  explicit Lattice(LatticeSpec spec);

  LatticeSpec spec_;
  LatticeConstants constants_;
};

LatticeConstants constants(const Lattice& lattice);

/// Sequences up to index N. alpha_n and gamma_n use the closed forms; beta_n
/// is generated by its second-order recurrence, which keeps q-lattices free
/// of the q^{1/4} in its closed form.
LatticeSequences sequences(const Lattice& lattice, std::size_t N);

}  // namespace lopq
