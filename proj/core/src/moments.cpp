#include "lopq/moments.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "lopq/errors.hpp"

namespace lopq {

MomentSeq::MomentSeq(Lattice lattice, std::vector<Scalar> moments)
    : lattice_(std::move(lattice)), moments_(std::move(moments)) {
  if (moments_.empty()) throw MomentLengthError(1, 0);
}

MomentSeq MomentSeq::prefix(std::size_t count) const {
  if (count > moments_.size()) throw MomentLengthError(count, moments_.size());
  return MomentSeq(lattice_, std::vector<Scalar>(moments_.begin(), moments_.begin() + count));
}

MomentSeq& MomentSeq::operator*=(const Scalar& factor) {
  for (auto& m : moments_) m *= factor;
  return *this;
}

namespace {

void require_same_lattice(const MomentSeq& lhs, const MomentSeq& rhs) {
  if (!(lhs.lattice() == rhs.lattice())) {
    throw std::invalid_argument("moment sequences live on different lattices");
  }
}

void require_table_lattice(const OperatorTable& ops, const MomentSeq& u) {
  if (!(ops.lattice() == u.lattice())) {
    throw std::invalid_argument("operator table and functional use different lattices");
  }
}

}  // namespace

MomentSeq operator+(const MomentSeq& lhs, const MomentSeq& rhs) {
  require_same_lattice(lhs, rhs);
  const std::size_t n = std::min(lhs.size(), rhs.size());
  std::vector<Scalar> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lhs[i] + rhs[i];
  return MomentSeq(lhs.lattice(), std::move(out));
}

MomentSeq operator-(const MomentSeq& lhs, const MomentSeq& rhs) {
  require_same_lattice(lhs, rhs);
  const std::size_t n = std::min(lhs.size(), rhs.size());
  std::vector<Scalar> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lhs[i] - rhs[i];
  return MomentSeq(lhs.lattice(), std::move(out));
}

Scalar apply(const MomentSeq& u, const Poly& f) {
  if (f.is_zero()) return 0;
  const auto deg = static_cast<std::size_t>(f.degree());
  if (deg > u.max_degree()) throw MomentLengthError(deg + 1, u.size());
  Scalar acc = 0;
  const auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_zero(c[i])) acc += c[i] * u[i];
  }
  return acc;
}

MomentSeq dual_dx(OperatorTable& ops, const MomentSeq& u) {
  require_table_lattice(ops, u);
  const std::size_t count = u.size() + 1;
  std::vector<Scalar> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = -apply(u, ops.d_row(n));
  return MomentSeq(u.lattice(), std::move(out));
}

MomentSeq dual_sx(OperatorTable& ops, const MomentSeq& u) {
  require_table_lattice(ops, u);
  std::vector<Scalar> out(u.size());
  for (std::size_t n = 0; n < u.size(); ++n) out[n] = apply(u, ops.s_row(n));
  return MomentSeq(u.lattice(), std::move(out));
}

MomentSeq dual_dx_pow(OperatorTable& ops, MomentSeq u, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) u = dual_dx(ops, u);
  return u;
}

MomentSeq dual_sx_pow(OperatorTable& ops, MomentSeq u, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) u = dual_sx(ops, u);
  return u;
}

MomentSeq mul(const Poly& f, const MomentSeq& u) {
  if (f.is_zero()) return MomentSeq(u.lattice(), std::vector<Scalar>(u.size()));
  const auto deg = static_cast<std::size_t>(f.degree());
  if (deg >= u.size()) throw MomentLengthError(deg + 1, u.size());
  const std::size_t count = u.size() - deg;
  const auto c = f.coeffs();
  std::vector<Scalar> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    Scalar acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!is_zero(c[i])) acc += c[i] * u[n + i];
    }
    out[n] = std::move(acc);
  }
  return MomentSeq(u.lattice(), std::move(out));
}

Poly pearson_projection(OperatorTable& ops, const PearsonPair& pair, std::size_t n) {
  // <D_x(phi u) - S_x(psi u), z^n> = <u, -phi D_x z^n - psi S_x z^n>.
  return -(pair.phi() * ops.d_row(n)) - pair.psi() * ops.s_row(n);
}

MomentSeq pearson_moments(OperatorTable& ops, const PearsonPair& pair, std::size_t N) {
  std::vector<Scalar> u;
  u.reserve(N + 1);
  u.emplace_back(1);
  for (std::size_t n = 0; n < N; ++n) {
    const Poly g = pearson_projection(ops, pair, n);
    // Coefficient of u_{n+1} is -d_n; everything below is already known.
    const Scalar lead = g.coeff(n + 1);
    if (is_zero(lead)) throw AdmissibilityError(static_cast<long>(n));
    Scalar known = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      const Scalar cj = g.coeff(j);
      if (!is_zero(cj)) known += cj * u[j];
    }
    u.push_back(-known / lead);
  }
  return MomentSeq(ops.lattice(), std::move(u));
}

MomentSeq pearson_moments(const Lattice& lattice, const PearsonPair& pair, std::size_t N) {
  OperatorTable ops(lattice);
  return pearson_moments(ops, pair, N);
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix is not square");
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Scalar hankel(const MomentSeq& u, std::size_t n) {
  if (2 * n > u.max_degree()) throw MomentLengthError(2 * n + 1, u.size());
  // Clear denominators so the elimination runs over the integers.
  mpz_class scale = 1;
  for (std::size_t i = 0; i <= 2 * n; ++i) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), u[i].get_den_mpz_t());
  }
  std::vector<std::vector<mpz_class>> m(n + 1, std::vector<mpz_class>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const Scalar& v = u[i + j];
      m[i][j] = v.get_num() * (scale / v.get_den());
    }
  }
  mpz_class scale_pow;
  mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n + 1));
  Scalar det(bareiss_determinant(std::move(m)), scale_pow);
  det.canonicalize();
  return det;
}

namespace {

// Runs Gram-Schmidt on monomials up to degree `max_degree`, returning the
// monic orthogonal polynomials and their squared norms.
void orthogonalize(const MomentSeq& u, std::size_t max_degree, std::vector<Poly>& polys,
                   std::vector<Scalar>& norms) {
  for (std::size_t n = 0; n <= max_degree; ++n) {
    Poly p = Poly::monomial(n);
    const Poly zn = p;
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar proj = apply(u, zn * polys[k]) / norms[k];
      p -= polys[k] * proj;
    }
    Scalar norm = apply(u, p * p);
    if (is_zero(norm)) throw RegularityBreakError(n);
    polys.push_back(std::move(p));
    norms.push_back(std::move(norm));
  }
}

}  // namespace

std::vector<Poly> gram_schmidt_polys(const MomentSeq& u) {
  std::vector<Poly> polys;
  std::vector<Scalar> norms;
  orthogonalize(u, u.max_degree() / 2, polys, norms);
  return polys;
}

TTRRCoeffs ttrr_oracle(const MomentSeq& u) {
  const std::size_t count = (u.max_degree() + 1) / 2;
  TTRRCoeffs out;
  if (count == 0) return out;
  std::vector<Poly> polys;
  std::vector<Scalar> norms;
  orthogonalize(u, count - 1, polys, norms);
  const Poly z = z_poly();
  for (std::size_t n = 0; n < count; ++n) {
    out.B.push_back(apply(u, z * polys[n] * polys[n]) / norms[n]);
    if (n >= 1) out.C.push_back(norms[n] / norms[n - 1]);
  }
  return out;
}

}  // namespace lopq
