#pragma once

#include <cstddef>
#include <vector>

#include "lopq/lattice.hpp"
#include "lopq/poly.hpp"

namespace lopq {

/// D_x and S_x as linear maps on the monomial basis of one lattice.
///
/// Row n holds D_x z^n and S_x z^n, built from the product rules
///   D_x z^{n+1} = (alpha z + beta) D_x z^n + S_x z^n,
///   S_x z^{n+1} = U2 D_x z^n + (alpha z + beta) S_x z^n,
/// starting from D_x 1 = 0, S_x 1 = 1. Rows are appended on demand and never
/// change once written. Growth happens through the non-const members, so a
/// table has a single owner; share it read-only only after reserve().
class OperatorTable {
 public:
  explicit OperatorTable(Lattice lattice);

  const Lattice& lattice() const { return lattice_; }

  /// Builds rows 0..degree.
  void reserve(std::size_t degree);
  /// Highest row built so far.
  std::size_t high_water() const { return d_rows_.size() - 1; }

  const Poly& d_row(std::size_t n);
  const Poly& s_row(std::size_t n);

  Poly dx(const Poly& f);
  Poly sx(const Poly& f);
  /// D_x^k f.
  Poly dx_pow(Poly f, std::size_t k);

  /// T_{n,k} f; zero when k < 0 or k > n.
  Poly t_nk(const Poly& f, long n, long k);
  /// rows[n][k] = T_{n,k} f for 0 <= k <= n <= max_n.
  std::vector<std::vector<Poly>> t_table(const Poly& f, std::size_t max_n);

 private:
  Lattice lattice_;
  Poly shift_;  // alpha z + beta
  std::vector<Poly> d_rows_;
  std::vector<Poly> s_rows_;
};

/// One-shot conveniences over a temporary table.
Poly dx(const Lattice& lattice, const Poly& f);
Poly sx(const Lattice& lattice, const Poly& f);
Poly t_nk(const Lattice& lattice, const Poly& f, long n, long k);

}  // namespace lopq
