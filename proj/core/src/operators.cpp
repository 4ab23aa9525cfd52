#include "lopq/operators.hpp"

#include <utility>

namespace lopq {

OperatorTable::OperatorTable(Lattice lattice)
    : lattice_(std::move(lattice)), shift_({lattice_.beta(), lattice_.alpha()}) {
  d_rows_.emplace_back();   // D_x 1 = 0
  s_rows_.emplace_back(1);  // S_x 1 = 1
}

void OperatorTable::reserve(std::size_t degree) {
  const Poly& u2 = lattice_.u2();
  while (d_rows_.size() <= degree) {
    const Poly& d = d_rows_.back();
    const Poly& s = s_rows_.back();
    Poly next_d = shift_ * d + s;
    Poly next_s = u2 * d + shift_ * s;
    d_rows_.push_back(std::move(next_d));
    s_rows_.push_back(std::move(next_s));
  }
}

const Poly& OperatorTable::d_row(std::size_t n) {
  reserve(n);
  return d_rows_[n];
}

const Poly& OperatorTable::s_row(std::size_t n) {
  reserve(n);
  return s_rows_[n];
}

Poly OperatorTable::dx(const Poly& f) {
  if (f.is_zero()) return {};
  reserve(static_cast<std::size_t>(f.degree()));
  Poly out;
  const auto c = f.coeffs();
  for (std::size_t n = 1; n < c.size(); ++n) {
    if (!is_zero(c[n])) out += d_rows_[n] * c[n];
  }
  return out;
}

Poly OperatorTable::sx(const Poly& f) {
  if (f.is_zero()) return {};
  reserve(static_cast<std::size_t>(f.degree()));
  Poly out;
  const auto c = f.coeffs();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (!is_zero(c[n])) out += s_rows_[n] * c[n];
  }
  return out;
}

Poly OperatorTable::dx_pow(Poly f, std::size_t k) {
  for (std::size_t i = 0; i < k && !f.is_zero(); ++i) f = dx(f);
  return f;
}

std::vector<std::vector<Poly>> OperatorTable::t_table(const Poly& f, std::size_t max_n) {
  const Poly& u1 = lattice_.u1();
  std::vector<std::vector<Poly>> rows;
  rows.reserve(max_n + 1);
  rows.push_back({f});
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& prev = rows[n - 1];
    std::vector<Poly> row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Poly t;
      if (k <= n - 1) {
        const Poly& p = prev[k];
        const long j = static_cast<long>(n - k);
        const Scalar ratio = lattice_.gamma_n(j) / lattice_.alpha_n(j);
        t += sx(p);
        t -= u1 * dx(p) * ratio;
      }
      if (k >= 1) {
        const long j = static_cast<long>(n + 1 - k);
        t += dx(prev[k - 1]) / lattice_.alpha_n(j);
      }
      row[k] = std::move(t);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Poly OperatorTable::t_nk(const Poly& f, long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  return t_table(f, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Poly dx(const Lattice& lattice, const Poly& f) { return OperatorTable(lattice).dx(f); }

Poly sx(const Lattice& lattice, const Poly& f) { return OperatorTable(lattice).sx(f); }

Poly t_nk(const Lattice& lattice, const Poly& f, long n, long k) {
  return OperatorTable(lattice).t_nk(f, n, k);
}

}  // namespace lopq
