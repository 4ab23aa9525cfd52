#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lopq {

/// A lattice parameter record violates its invariants.
class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A moment prefix is too short for the requested operation.
class MomentLengthError : public std::length_error {
 public:
  MomentLengthError(std::size_t needed, std::size_t available);

  std::size_t needed() const { return needed_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t needed_;
  std::size_t available_;
};

/// d_n vanished where the computation needed to divide by it.
class AdmissibilityError : public std::domain_error {
 public:
  explicit AdmissibilityError(long n);

  long n() const { return n_; }

 private:
  long n_;
};

/// The Gram orthogonalization met an orthogonal polynomial of zero u-norm.
class RegularityBreakError : public std::domain_error {
 public:
  explicit RegularityBreakError(std::size_t n);

  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
};

}  // namespace lopq
