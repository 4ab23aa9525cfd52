#include "lopq/classical.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lopq/errors.hpp"

namespace lopq {

namespace {

const Scalar& nonzero_d(const DnEn& de, long n) {
  const Scalar& v = de.d_at(n);
  if (is_zero(v)) throw AdmissibilityError(n);
  return v;
}

PearsonPair closed_form_q(const Lattice& lattice, const PearsonPair& pr, std::size_t k) {
  const auto& q = lattice.q_params();
  const long kk = static_cast<long>(k);
  const Scalar a2m1 = lattice.alpha() * lattice.alpha() - 1;
  const Scalar phi_c3 = pr.phi()(q.c3);
  const Scalar dphi_c3 = 2 * pr.a * q.c3 + pr.b;
  const Scalar psi_c3 = pr.d * q.c3 + pr.e;
  const Scalar g2k = lattice.gamma_n(2 * kk);
  const Scalar a2k = lattice.alpha_n(2 * kk);
  const Scalar gk = lattice.gamma_n(kk);
  const Scalar ak = lattice.alpha_n(kk);

  const Scalar lead = pr.d * a2m1 * g2k + pr.a * a2k;
  const Scalar linear = psi_c3 * a2m1 * gk + dphi_c3 * ak;
  PearsonPair out;
  out.a = lead;
  out.b = linear - 2 * q.c3 * lead;
  out.c = phi_c3 + 2 * pr.a * q.m - q.c3 * linear + (q.c3 * q.c3 - 2 * q.m) * lead;
  out.d = pr.a * g2k + pr.d * a2k;
  out.e = dphi_c3 * gk + psi_c3 * ak - q.c3 * out.d;
  return out;
}

PearsonPair closed_form_quadratic(const Lattice& lattice, const PearsonPair& pr, std::size_t k) {
  const Scalar& beta = lattice.beta();
  const Scalar n = static_cast<long>(k);
  const Scalar dn = pr.a * n + pr.d;
  PearsonPair out;
  out.a = pr.a;
  out.b = pr.b + 6 * beta * n * dn;
  out.c = quadratic_phi_constant(lattice, pr, k);
  out.d = 2 * pr.a * n + pr.d;
  out.e = pr.b * n + pr.e + 2 * pr.d * beta * n * n + beta * n * n * (2 * pr.a * n + pr.d);
  return out;
}

PearsonPair closed_form(const Lattice& lattice, const PearsonPair& pair, std::size_t k) {
  return lattice.is_q() ? closed_form_q(lattice, pair, k) : closed_form_quadratic(lattice, pair, k);
}

}  // namespace

Scalar quadratic_phi_constant(const Lattice& lattice, const PearsonPair& pair, std::size_t n) {
  const auto& r = lattice.quadratic_params();
  const Scalar& beta = lattice.beta();
  const Scalar nn = static_cast<long>(n);
  const Scalar point = beta * nn * nn;
  const Scalar dn = pair.a * nn + pair.d;
  return pair.phi()(point) + 2 * beta * nn * pair.psi()(point) -
         nn / 4 * (16 * beta * r.c6 - r.c5 * r.c5) * dn;
}

PearsonPair iterate_step(OperatorTable& ops, const PearsonPair& pair) {
  const Lattice& lattice = ops.lattice();
  const Poly phi = pair.phi();
  const Poly psi = pair.psi();
  const Poly dpsi = ops.dx(psi);
  const Poly spsi = ops.sx(psi);
  const Poly next_phi = ops.sx(phi) + lattice.u1() * spsi + lattice.alpha() * (lattice.u2() * dpsi);
  const Poly next_psi = ops.dx(phi) + lattice.alpha() * spsi + lattice.u1() * dpsi;
  return PearsonPair{next_phi.coeff(2), next_phi.coeff(1), next_phi.coeff(0), next_psi.coeff(1),
                     next_psi.coeff(0)};
}

std::vector<IteratedPair> iterate_pairs(const Lattice& lattice, const PearsonPair& pair,
                                        std::size_t K, IterationPath path) {
  std::vector<IteratedPair> out;
  out.reserve(K + 1);
  if (path == IterationPath::kClosedForm) {
    for (std::size_t k = 0; k <= K; ++k) out.push_back({k, closed_form(lattice, pair, k)});
    return out;
  }
  OperatorTable ops(lattice);
  ops.reserve(2);
  out.push_back({0, pair});
  for (std::size_t k = 1; k <= K; ++k) out.push_back({k, iterate_step(ops, out.back().pair)});
  return out;
}

IteratedPair iterate_pair(const Lattice& lattice, const PearsonPair& pair, std::size_t k,
                          IterationPath path) {
  if (path == IterationPath::kClosedForm) return {k, closed_form(lattice, pair, k)};
  return iterate_pairs(lattice, pair, k, path).back();
}

Scalar d_n_k(const Lattice& lattice, const PearsonPair& pair, long n, std::size_t k) {
  const PearsonPair pk = closed_form(lattice, pair, k);
  return pk.a * lattice.gamma_n(n) + pk.d * lattice.alpha_n(n);
}

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::kDnZero: return "d_n_zero";
    case FailureKind::kPhiKRoot: return "phi_k_root";
  }
  return "?";
}

RegularityError::RegularityError(Failure failure)
    : std::domain_error(std::string("regularity fails at n = ") + std::to_string(failure.n) + " (" +
                        to_string(failure.kind) + ")"),
      failure_(failure) {}

Scalar evaluation_point(const Lattice& lattice, const DnEn& de, std::size_t n) {
  const long nn = static_cast<long>(n);
  const Scalar& d2n = nonzero_d(de, 2 * nn);
  const Scalar root_shift = de.e_at(nn) / d2n;
  if (lattice.is_q()) return lattice.q_params().c3 - root_shift;
  return -lattice.beta() * nn * nn - root_shift;
}

RegularityReport regularity(const Lattice& lattice, const PearsonPair& pair, std::size_t N) {
  RegularityReport report;
  report.N = N;
  const DnEn de = dn_en(lattice, pair, 2 * N);
  report.d_seq = de.d;
  report.e_seq.assign(de.e.begin(), de.e.begin() + static_cast<long>(N) + 1);

  for (long k = 0; k <= static_cast<long>(2 * N); ++k) {
    if (is_zero(de.d_at(k))) {
      report.admissible_up_to = k - 1;
      break;
    }
  }

  long checked = -1;
  for (long n = 0; n <= static_cast<long>(N); ++n) {
    for (long k = checked + 1; k <= 2 * n; ++k) {
      if (is_zero(de.d_at(k))) {
        report.first_failure = Failure{k, FailureKind::kDnZero};
        report.regular_up_to = n - 1;
        return report;
      }
    }
    checked = 2 * n;
    const Scalar point = evaluation_point(lattice, de, static_cast<std::size_t>(n));
    const Scalar value = closed_form(lattice, pair, static_cast<std::size_t>(n)).phi()(point);
    const bool root = is_zero(value);
    report.phi_values.push_back(value);
    if (root) {
      report.first_failure = Failure{n, FailureKind::kPhiKRoot};
      report.regular_up_to = n - 1;
      return report;
    }
  }
  return report;
}

Scalar recurrence_b(const Lattice& lattice, const DnEn& de, std::size_t n) {
  const long nn = static_cast<long>(n);
  Scalar b = lattice.is_q() ? lattice.q_params().c3 : Scalar(-2 * lattice.beta() * nn * (nn - 1));
  if (n >= 1) b += lattice.gamma_n(nn) * de.e_at(nn - 1) / nonzero_d(de, 2 * nn - 2);
  b -= lattice.gamma_n(nn + 1) * de.e_at(nn) / nonzero_d(de, 2 * nn);
  return b;
}

Scalar recurrence_c_next(const Lattice& lattice, const PearsonPair& pair, const DnEn& de,
                         std::size_t n) {
  const long nn = static_cast<long>(n);
  const Scalar point = evaluation_point(lattice, de, n);
  const Scalar value = closed_form(lattice, pair, n).phi()(point);
  if (n == 0) return -value / nonzero_d(de, 1);
  return -lattice.gamma_n(nn + 1) * de.d_at(nn - 1) /
         (nonzero_d(de, 2 * nn - 1) * nonzero_d(de, 2 * nn + 1)) * value;
}

TTRRCoeffs ttrr_formulas(const Lattice& lattice, const PearsonPair& pair, std::size_t N) {
  TTRRCoeffs out;
  if (N == 0) return out;
  const DnEn de = dn_en(lattice, pair, 2 * N);
  out.B.reserve(N);
  out.C.reserve(N - 1);
  for (std::size_t n = 0; n < N; ++n) out.B.push_back(recurrence_b(lattice, de, n));
  for (std::size_t n = 0; n + 1 < N; ++n) out.C.push_back(recurrence_c_next(lattice, pair, de, n));
  return out;
}

TTRRCoeffs ttrr_coeffs(const Lattice& lattice, const PearsonPair& pair, std::size_t N) {
  const RegularityReport report = regularity(lattice, pair, N);
  if (report.first_failure) throw RegularityError(*report.first_failure);
  return ttrr_formulas(lattice, pair, N);
}

MonicOPS::MonicOPS(TTRRCoeffs ttrr) : ttrr_(std::move(ttrr)) {
  const std::size_t N = ttrr_.size();
  if (ttrr_.C.size() + 1 < N) throw std::invalid_argument("TTRR needs C_1..C_{N-1}");
  polys_.reserve(N + 1);
  polys_.emplace_back(1);
  const Poly z = z_poly();
  for (std::size_t n = 0; n < N; ++n) {
    Poly next = (z - Poly(ttrr_.B[n])) * polys_[n];
    if (n >= 1) next -= ttrr_.c_at(n) * polys_[n - 1];
    polys_.push_back(std::move(next));
  }
}

Poly MonicOPS::derived(OperatorTable& ops, std::size_t n, std::size_t k) const {
  if (n + k > max_degree()) throw std::out_of_range("P_n^[k] needs n + k <= N");
  const Lattice& lattice = ops.lattice();
  const Scalar scale = lattice.gamma_factorial(n) / lattice.gamma_factorial(n + k);
  return ops.dx_pow(polys_[n + k], k) * scale;
}

MomentSeq u_k_moments(OperatorTable& ops, const PearsonPair& pair, const MomentSeq& u,
                      std::size_t k) {
  const Lattice& lattice = ops.lattice();
  const auto pairs = iterate_pairs(lattice, pair, k);
  MomentSeq v = u;
  for (std::size_t j = 0; j < k; ++j) {
    const Poly& u2 = lattice.u2();
    const MomentSeq first = dual_dx(ops, mul(u2 * pairs[j].psi(), v));
    const MomentSeq second = dual_sx(ops, mul(pairs[j].phi(), v));
    v = first - second;
  }
  return v;
}

Scalar k_n(const Lattice& lattice, const PearsonPair& pair, std::size_t n) {
  const long nn = static_cast<long>(n);
  Scalar prod = pow(Scalar(-lattice.alpha()), nn);
  for (long j = 1; j <= nn; ++j) {
    const Scalar d = d_n(lattice, pair, nn + j - 2);
    if (is_zero(d)) throw AdmissibilityError(nn + j - 2);
    prod *= d;
  }
  return 1 / prod;
}

RodriguesVerdict rodrigues_check(const Lattice& lattice, const PearsonPair& pair, std::size_t n,
                                 std::size_t M) {
  OperatorTable ops(lattice);
  const MomentSeq u = pearson_moments(ops, pair, M + n);
  const MonicOPS monic(ttrr_formulas(lattice, pair, n));
  const MomentSeq lhs = mul(monic[n], u);
  const MomentSeq rhs = k_n(lattice, pair, n) * dual_dx_pow(ops, u_k_moments(ops, pair, u, n), n);
  if (lhs.size() < M + 1) throw MomentLengthError(M + 1, lhs.size());
  if (rhs.size() < M + 1) throw MomentLengthError(M + 1, rhs.size());

  RodriguesVerdict verdict;
  verdict.n = n;
  verdict.M = M;
  for (std::size_t i = 0; i <= M; ++i) {
    verdict.lhs.push_back(lhs[i]);
    verdict.rhs.push_back(rhs[i]);
    if (!verdict.first_mismatch && lhs[i] != rhs[i]) verdict.first_mismatch = i;
  }
  verdict.equal = !verdict.first_mismatch.has_value();
  return verdict;
}

RSequenceCoeffs r_n_coefficients(const Lattice& lattice, const PearsonPair& pair, std::size_t N) {
  RSequenceCoeffs out;
  if (N == 0) return out;
  const DnEn de = dn_en(lattice, pair, 2 * N);
  const Scalar& alpha = lattice.alpha();
  out.a.push_back(-alpha * pair.d);
  out.s.push_back(alpha * pair.e);
  out.t.emplace_back(0);
  for (std::size_t n = 1; n < N; ++n) {
    const long nn = static_cast<long>(n);
    const Scalar an = -alpha * de.d_at(2 * nn) * de.d_at(2 * nn - 1) / nonzero_d(de, nn - 1);
    const Scalar point = evaluation_point(lattice, de, n - 1);
    const Scalar value = closed_form(lattice, pair, n - 1).phi()(point);
    out.s.push_back(an * recurrence_b(lattice, de, n));
    out.t.push_back(an * alpha * lattice.gamma_n(nn) * de.d_at(2 * nn - 2) /
                    nonzero_d(de, 2 * nn - 1) * value);
    out.a.push_back(an);
  }
  return out;
}

std::vector<Poly> r_n_sequence(const Lattice& lattice, const PearsonPair& pair, std::size_t N) {
  const RSequenceCoeffs k = r_n_coefficients(lattice, pair, N);
  std::vector<Poly> out;
  out.reserve(N + 1);
  out.emplace_back(1);
  for (std::size_t n = 0; n < N; ++n) {
    Poly next = Poly::linear_factor(k.a[n], 0) * out[n] - Poly(k.s[n]) * out[n];
    if (n >= 1) next -= k.t[n] * out[n - 1];
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace lopq
