#include "lopq/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "lopq/errors.hpp"

namespace lopq {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Scalar make_scalar(long num, long den) {
  if (den == 0) throw std::domain_error("make_scalar: zero denominator");
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Scalar out(n, d);
  out.canonicalize();
  return out;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

Scalar pow(const Scalar& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw std::domain_error("pow: zero base with negative exponent");
    return pow(Scalar(1 / base), -exponent);
  }
  mpz_class num;
  mpz_class den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime, so no canonicalize needed.
  return Scalar(num, den);
}

MomentLengthError::MomentLengthError(std::size_t needed, std::size_t available)
    : std::length_error("insufficient moments: need " + std::to_string(needed) + ", have " +
                        std::to_string(available)),
      needed_(needed),
      available_(available) {}

AdmissibilityError::AdmissibilityError(long n)
    : std::domain_error("pair is not admissible: d_" + std::to_string(n) + " = 0"), n_(n) {}

RegularityBreakError::RegularityBreakError(std::size_t n)
    : std::domain_error("functional is not regular: (P_" + std::to_string(n) + ", P_" +
                        std::to_string(n) + ") = 0"),
      n_(n) {}

}  // namespace lopq
