#pragma once

// Checkers behind the acceptance criteria. Each returns a Check carrying the
// first discrepancy found; the gtest suites and the acceptance driver both
// call them.

#include <cstddef>
#include <string>

#include "lopq/families.hpp"

namespace lopq::testing {

struct Check {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;

  /// Records the first failure only.
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond) fail(what);
  }
};

FamilyBundle aw_preset();
FamilyBundle racah_preset();
/// ab = q^{-3}, abcd not a power q^{-k}: admissible, irregular.
FamilyBundle aw_irregular();
/// abcd = q^{-3}.
FamilyBundle aw_abcd_q3();
/// ab = q^{-2}.
FamilyBundle aw_ab_q2();

Check lattice_identities();
Check operator_identities(unsigned seed, int cases);
Check leibniz_on_moments(unsigned seed);
Check functional_lemmas(unsigned seed);
Check iterated_pairs();
Check family_end_to_end(const FamilyBundle& family, std::size_t closed_n, std::size_t oracle_n);
Check rodrigues(std::size_t max_n, std::size_t M);
Check failure_detection();
Check derived_orthogonality(const FamilyBundle& family, std::size_t max_n);

}  // namespace lopq::testing
