#include "lopq/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "lopq/errors.hpp"

namespace lopq {

const char* to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::kQQuadratic: return "q-quadratic";
    case LatticeKind::kQLinear: return "q-linear";
    case LatticeKind::kQuadratic: return "quadratic";
    case LatticeKind::kLinear: return "linear";
  }
  return "?";
}

const Scalar& LatticeSequences::alpha_at(long n) const {
  if (n == -1) return alpha_minus_one;
  return alpha.at(static_cast<std::size_t>(n));
}

const Scalar& LatticeSequences::gamma_at(long n) const {
  if (n == -1) return gamma_minus_one;
  return gamma.at(static_cast<std::size_t>(n));
}

Lattice Lattice::q_lattice(Scalar p, Scalar c3, Scalar m) {
  return Lattice(QLatticeParams{std::move(p), std::move(c3), std::move(m)});
}

Lattice Lattice::quadratic(Scalar c4, Scalar c5, Scalar c6) {
  return Lattice(QuadraticLatticeParams{std::move(c4), std::move(c5), std::move(c6)});
}

Lattice Lattice::from_spec(const LatticeSpec& spec) { return Lattice(spec); }

Lattice::Lattice(LatticeSpec spec) : spec_(std::move(spec)) {
  if (const auto* q = std::get_if<QLatticeParams>(&spec_)) {
    if (sgn(q->p) <= 0) throw LatticeError("q-lattice requires p = q^(1/2) > 0");
    if (q->p == 1) throw LatticeError("q-lattice requires p != 1 (use a quadratic lattice for q = 1)");
    auto& k = constants_;
    k.alpha = (q->p + 1 / q->p) / 2;
    k.beta = (1 - k.alpha) * q->c3;
    const Scalar a2m1 = k.alpha * k.alpha - 1;
    k.delta = a2m1 * (q->c3 * q->c3 - 4 * q->m);
    k.u1 = Poly::linear_factor(a2m1, q->c3);
    const Poly centered = Poly::linear_factor(1, q->c3);
    k.u2 = (centered * centered - Poly(Scalar(4 * q->m))) * a2m1;
  } else {
    const auto& r = std::get<QuadraticLatticeParams>(spec_);
    if (is_zero(r.c4) && is_zero(r.c5)) {
      throw LatticeError("quadratic lattice requires (c4, c5) != (0, 0); constant lattices are not supported");
    }
    auto& k = constants_;
    k.alpha = 1;
    k.beta = r.c4 / 4;
    k.delta = r.c5 * r.c5 / 4 - r.c4 * r.c6;
    k.u1 = Poly(Scalar(r.c4 / 2));
    k.u2 = Poly({Scalar(r.c5 * r.c5 / 4 - r.c4 * r.c6), r.c4});
  }
}

LatticeKind Lattice::kind() const {
  if (const auto* q = std::get_if<QLatticeParams>(&spec_)) {
    return is_zero(q->m) ? LatticeKind::kQLinear : LatticeKind::kQQuadratic;
  }
  return is_zero(quadratic_params().c4) ? LatticeKind::kLinear : LatticeKind::kQuadratic;
}

Scalar Lattice::alpha_n(long n) const {
  if (!is_q()) return 1;
  const Scalar& p = q_params().p;
  return (pow(p, n) + pow(p, -n)) / 2;
}

Scalar Lattice::gamma_n(long n) const {
  if (!is_q()) return n;
  const Scalar& p = q_params().p;
  return (pow(p, n) - pow(p, -n)) / (p - 1 / p);
}

Scalar Lattice::gamma_factorial(std::size_t n) const {
  Scalar out = 1;
  for (std::size_t j = 1; j <= n; ++j) out *= gamma_n(static_cast<long>(j));
  return out;
}

LatticeConstants constants(const Lattice& lattice) { return lattice.constants(); }

LatticeSequences sequences(const Lattice& lattice, std::size_t N) {
  LatticeSequences seq;
  seq.alpha.reserve(N + 1);
  seq.gamma.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    seq.alpha.push_back(lattice.alpha_n(static_cast<long>(n)));
    seq.gamma.push_back(lattice.gamma_n(static_cast<long>(n)));
  }
  seq.alpha_minus_one = lattice.alpha();
  seq.gamma_minus_one = -1;

  const Scalar& beta = lattice.beta();
  seq.beta.assign(N + 1, Scalar(0));
  if (N >= 1) seq.beta[1] = beta;
  for (std::size_t n = 1; n + 1 <= N; ++n) {
    seq.beta[n + 1] = 2 * seq.beta[n] - seq.beta[n - 1] + 2 * beta * seq.alpha[n];
  }
  return seq;
}

}  // namespace lopq
