#include <gtest/gtest.h>

#include "lopq/lattice.hpp"
#include "lopq/operators.hpp"
#include "support.hpp"

namespace lopq {
namespace {

using testing::dx_quotient;
using testing::good_nodes;
using testing::sx_quotient;

TEST(Operators, TrivialRows) {
  for (const Lattice& l : testing::sample_lattices()) {
    OperatorTable ops(l);
    EXPECT_TRUE(ops.dx(Poly(1)).is_zero());
    EXPECT_EQ(ops.sx(Poly(1)), Poly(1));
    EXPECT_EQ(ops.dx(z_poly()), Poly(1));
    EXPECT_EQ(ops.sx(z_poly()), Poly({l.beta(), l.alpha()}));
    EXPECT_EQ(ops.sx(l.u1()), l.alpha() * l.u1());
    EXPECT_EQ(ops.dx(l.u1()), Poly(l.alpha() * l.alpha() - 1));
  }
}

TEST(Operators, QuadraticHandExample) {
  // x(s) = s^2: D_x z^2 = 2z + 1/2 and S_x z = z + 1/4.
  OperatorTable ops(Lattice::quadratic(1, 0, 0));
  EXPECT_EQ(ops.dx(Poly::monomial(2)), Poly({make_scalar(1, 2), 2}));
  EXPECT_EQ(ops.sx(z_poly()), Poly({make_scalar(1, 4), 1}));
}

TEST(Operators, CubicOnQLattice) {
  const Lattice l = Lattice::q_lattice(2, make_scalar(1, 3), make_scalar(5, 2));
  OperatorTable ops(l);
  const Poly d = ops.dx(Poly::monomial(3));
  EXPECT_EQ(d.degree(), 2);
  EXPECT_EQ(d.coeff(2), l.gamma_n(3));
  EXPECT_EQ(d.coeff(1), (3 * l.gamma_n(2) - 2 * l.gamma_n(3)) * l.q_params().c3);
}

// The cached maps reproduce the defining quotients at lattice nodes.
TEST(Operators, MatchDefiningQuotients) {
  testing::RandomRationals rng(2024);
  int cases = 0;
  for (const Lattice& l : testing::sample_lattices()) {
    OperatorTable ops(l);
    for (int trial = 0; trial < 10; ++trial, ++cases) {
      const Poly f = rng.poly(rng.index(0, 6));
      const Poly df = ops.dx(f);
      const Poly sf = ops.sx(f);
      for (long j : good_nodes(l, 5)) {
        ASSERT_EQ(df(testing::node(l, j)), dx_quotient(l, f, j));
        ASSERT_EQ(sf(testing::node(l, j)), sx_quotient(l, f, j));
      }
    }
  }
  EXPECT_GE(cases, 50);
}

TEST(Operators, DegreeAndLeadingCoefficient) {
  for (const Lattice& l : testing::sample_lattices()) {
    OperatorTable ops(l);
    for (std::size_t n = 1; n <= 10; ++n) {
      const Poly sn = ops.s_row(n);
      EXPECT_EQ(sn.degree(), static_cast<int>(n));
      EXPECT_EQ(sn.leading(), l.alpha_n(static_cast<long>(n)));
      EXPECT_EQ(ops.d_row(n).coeff(n - 1), l.gamma_n(static_cast<long>(n)));
    }
  }
}

TEST(Operators, TableGrowsMonotonically) {
  OperatorTable ops(Lattice::q_lattice(3, 1, 2));
  ops.reserve(4);
  EXPECT_EQ(ops.high_water(), 4u);
  const Poly row3 = ops.d_row(3);
  ops.reserve(9);
  EXPECT_EQ(ops.high_water(), 9u);
  EXPECT_EQ(ops.d_row(3), row3);
  ops.reserve(2);
  EXPECT_EQ(ops.high_water(), 9u);
}

TEST(Operators, DxPowComposes) {
  OperatorTable ops(Lattice::quadratic(1, 2, 3));
  const Poly f({1, -2, 3, 0, 5});
  EXPECT_EQ(ops.dx_pow(f, 0), f);
  EXPECT_EQ(ops.dx_pow(f, 3), ops.dx(ops.dx(ops.dx(f))));
  EXPECT_TRUE(ops.dx_pow(f, 5).is_zero());
}

TEST(Operators, TnkBoundaryCases) {
  testing::RandomRationals rng(5);
  for (const Lattice& l : testing::sample_lattices()) {
    OperatorTable ops(l);
    const Poly f = rng.poly(4);
    EXPECT_EQ(ops.t_nk(f, 0, 0), f);
    EXPECT_TRUE(ops.t_nk(f, 2, 5).is_zero());
    EXPECT_TRUE(ops.t_nk(f, 2, -1).is_zero());
    for (long n = 0; n <= 6; ++n) {
      for (long k = 0; k <= n; ++k) EXPECT_LE(ops.t_nk(f, n, k).degree(), f.degree() - k);
    }
    const auto table = ops.t_table(f, 5);
    for (long n = 0; n <= 5; ++n) {
      for (long k = 0; k <= n; ++k) {
        EXPECT_EQ(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)],
                  ops.t_nk(f, n, k));
      }
    }
  }
}

// Degree <= 2 closed forms for T_{n,k} on q-lattices.
TEST(Operators, TnkClosedFormsOnQLattices) {
  testing::RandomRationals rng(77);
  for (const Lattice& l : testing::sample_q_lattices()) {
    OperatorTable ops(l);
    const Scalar& c3 = l.q_params().c3;
    const Scalar& m = l.q_params().m;
    const Scalar& al = l.alpha();
    for (int trial = 0; trial < 4; ++trial) {
      const Scalar a = rng.next();
      const Scalar b = rng.next();
      const Scalar c = rng.next();
      const Poly w = Poly::linear_factor(1, c3);
      const Poly g = a * w * w + b * w + Poly(c);
      for (long n = 0; n <= 8; ++n) {
        const Scalar an = l.alpha_n(n);
        const Scalar an1 = l.alpha_n(n - 1);
        const Scalar gn = l.gamma_n(n);
        const Poly t0 = al * a / (an * an1) * w * w + b / an * w +
                        Poly(c + 4 * a * (1 - al * al) * gn * m / an1);
        const Poly shifted = Poly({c3 - c3 / an, 1 / an});
        Poly t0_alt;
        {
          const Poly ws = shifted - Poly(c3);
          t0_alt = a * ws * ws + b * ws + Poly(c);
          const Poly u2 = l.u2();
          Poly u2s;
          for (std::size_t i = 0; i <= 2; ++i) {
            Poly term = Poly(u2.coeff(i));
            for (std::size_t e = 0; e < i; ++e) term *= shifted;
            u2s += term;
          }
          t0_alt += a * gn / an1 * u2s;
        }
        EXPECT_EQ(ops.t_nk(g, n, 0), t0);
        EXPECT_EQ(t0, t0_alt);
        const Poly t1 = gn / an * (a * (an + al * an1) / (an1 * an1) * w + Poly(b));
        EXPECT_EQ(ops.t_nk(g, n, 1), n >= 1 ? t1 : Poly());
        const Scalar t2 = a * gn * l.gamma_n(n - 1) / (an1 * an1);
        EXPECT_EQ(ops.t_nk(g, n, 2), n >= 2 ? Poly(t2) : Poly());
      }
    }
  }
}

}  // namespace
}  // namespace lopq
