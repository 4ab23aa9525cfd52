#include "lopq/families.hpp"

#include <stdexcept>
#include <string>

namespace lopq {

namespace {

Scalar checked_div(const Scalar& num, const Scalar& den, const char* what, std::size_t n) {
  if (is_zero(den)) {
    throw std::domain_error(std::string(what) + " closed form is undefined at n = " + std::to_string(n));
  }
  return num / den;
}

}  // namespace

bool is_negative_integer(const Scalar& x) { return x.get_den() == 1 && sgn(x) < 0; }

FamilyBundle racah_bundle(const RacahParams& params) {
  const Scalar a = params.a;
  const Scalar b = params.b;
  const Scalar c = params.c;
  const Scalar d = params.d;
  const Lattice lattice = Lattice::quadratic(1, a + b + 1, 0);

  const Scalar linear = (a + b + 2 * c + 3) * d + c * (a - b + 3) + 2 * (a + b + a * b + 2);
  const Scalar constant = (1 + a) * (1 + d) * (a + b + 1) * (b + c + 1);
  const PearsonPair pair = PearsonPair::make(2, linear, constant, 2 * (d + c + 2),
                                             2 * (1 + a) * (1 + d) * (b + c + 1));

  const Scalar s = d + c;
  auto closed_b = [=](std::size_t n) -> Scalar {
    const Scalar nn = static_cast<long>(n);
    if (n == 0) {
      // The factor n + d + c + 1 cancels against 2n + d + c + 1.
      return checked_div(-(a + 1) * (d + 1) * (b + c + 1), s + 2, "B_n", n);
    }
    const Scalar first = checked_div((nn + a + 1) * (nn + d + 1) * (nn + b + c + 1) * (nn + s + 1),
                                     (2 * nn + s + 1) * (2 * nn + s + 2), "B_n", n);
    const Scalar second = checked_div(nn * (nn + c) * (nn + s - a) * (nn + d - b),
                                      (2 * nn + s) * (2 * nn + s + 1), "B_n", n);
    return -first - second;
  };
  auto closed_c = [=](std::size_t n) -> Scalar {
    if (n == 0) throw std::domain_error("C_n is defined for n >= 1");
    const Scalar m = static_cast<long>(n - 1);  // formula is stated for C_{m+1}
    const Scalar head = (m + 1) * (m + a + 1) * (m + c + 1) * (m + d + 1) * (m + b + c + 1) *
                        (m + c + d - a + 1) * (m + d - b + 1);
    const Scalar den = (2 * m + s + 2) * (2 * m + s + 2) * (2 * m + s + 3);
    if (n == 1) return checked_div(head, den, "C_n", n);
    return checked_div(head * (m + s + 1), (2 * m + s + 1) * den, "C_n", n);
  };
  return FamilyBundle{"racah", lattice, pair, closed_b, closed_c};
}

FamilyBundle aw_bundle(const AWParams& params) {
  const Scalar a = params.a;
  const Scalar b = params.b;
  const Scalar c = params.c;
  const Scalar d = params.d;
  const Scalar r = params.r;
  const Scalar c3 = params.c3;
  const Lattice lattice = Lattice::q_lattice(params.p, c3, r * r);
  const Scalar q = params.p * params.p;

  const Scalar abcd = a * b * c * d;
  const Scalar e1 = a + b + c + d;
  const Scalar e3 = a * b * c + a * b * d + a * c * d + b * c * d;
  const Scalar e2 = a * b + a * c + a * d + b * c + b * d + c * d;
  const Poly w = Poly::linear_factor(1, c3);
  const Poly phi = 2 * (1 + abcd) * (w * w) - 2 * r * e1 * w - 2 * r * e3 * w +
                   Poly(Scalar(4 * r * r * (e2 - abcd - 1)));
  const Scalar scale = 4 * params.p / (q - 1);
  const Poly psi = scale * ((abcd - 1) * w + Poly(Scalar(r * (e1 - e3))));
  const PearsonPair pair = PearsonPair::from_polys(phi, psi);

  auto qp = [q](long n) { return pow(q, n); };
  auto closed_b = [=](std::size_t n) -> Scalar {
    if (is_zero(a)) throw std::domain_error("closed-form B_n needs a != 0");
    const long nn = static_cast<long>(n);
    const Scalar qn = qp(nn);
    const Scalar first = checked_div(
        (1 - a * b * qn) * (1 - a * c * qn) * (1 - a * d * qn) * (1 - abcd * qp(nn - 1)),
        a * (1 - abcd * qp(2 * nn - 1)) * (1 - abcd * qp(2 * nn)), "B_n", n);
    Scalar bracket = a + 1 / a - first;
    if (n >= 1) {
      bracket -= checked_div(
          a * (1 - qn) * (1 - b * c * qp(nn - 1)) * (1 - b * d * qp(nn - 1)) * (1 - c * d * qp(nn - 1)),
          (1 - abcd * qp(2 * nn - 1)) * (1 - abcd * qp(2 * nn - 2)), "B_n", n);
    }
    // Monic rescaling of the x = cos(theta) recurrence: z - c3 = 2 r x and
    // B = c3 + 2 r (bracket / 2).
    return c3 + r * bracket;
  };
  auto closed_c = [=](std::size_t n) -> Scalar {
    if (n == 0) throw std::domain_error("C_n is defined for n >= 1");
    const long m = static_cast<long>(n) - 1;  // formula is stated for C_{m+1}
    const Scalar qm = qp(m);
    const Scalar pairs = (1 - a * b * qm) * (1 - a * c * qm) * (1 - a * d * qm) * (1 - b * c * qm) *
                         (1 - b * d * qm) * (1 - c * d * qm);
    const Scalar mid = 1 - abcd * qp(2 * m);
    const Scalar head = r * r * (1 - qp(m + 1)) * pairs;
    const Scalar den = mid * mid * (1 - abcd * qp(2 * m + 1));
    if (m == 0) return checked_div(head, den, "C_n", n);
    return checked_div(head * (1 - abcd * qp(m - 1)), (1 - abcd * qp(2 * m - 1)) * den, "C_n", n);
  };
  return FamilyBundle{"askey-wilson", lattice, pair, closed_b, closed_c};
}

std::vector<Scalar> racah_regularity_set(const RacahParams& p) {
  return {p.a, p.c, p.d, p.d + p.c + 1, p.b + p.c, p.c + p.d - p.a, p.d - p.b};
}

bool racah_regular(const RacahParams& params) {
  for (const Scalar& x : racah_regularity_set(params)) {
    if (is_negative_integer(x)) return false;
  }
  return true;
}

Scalar aw_regularity_product(const AWParams& pr, std::size_t n) {
  const Scalar qn = pow(pr.p * pr.p, static_cast<long>(n));
  const Scalar& a = pr.a;
  const Scalar& b = pr.b;
  const Scalar& c = pr.c;
  const Scalar& d = pr.d;
  return pr.r * pr.r * (1 - a * b * c * d * qn) * (1 - a * b * qn) * (1 - a * c * qn) *
         (1 - a * d * qn) * (1 - b * c * qn) * (1 - b * d * qn) * (1 - c * d * qn);
}

}  // namespace lopq
