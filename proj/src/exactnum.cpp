#include "hullcount/exactnum.hpp"

#include "hullcount/error.hpp"

#include <stdexcept>

namespace hullcount {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::BadSubfieldOrder: return "BadSubfieldOrder";
    case ErrorKind::OddAmbientForSymplectic: return "OddAmbientForSymplectic";
    case ErrorKind::FieldNotASquareForHermitian: return "FieldNotASquareForHermitian";
    case ErrorKind::RankDeficientGenerator: return "RankDeficientGenerator";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::OutOfValidRange: return "OutOfValidRange";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::BadRegime: return "BadRegime";
    case ErrorKind::WorkLimitExceeded: return "WorkLimitExceeded";
    case ErrorKind::OddGramRank: return "OddGramRank";
    case ErrorKind::NotBinaryField: return "NotBinaryField";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_decimal(const ExactInt& value) { return value.str(); }

ExactInt parse_exact_int(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw Error(ErrorKind::ParseError, "empty integer literal");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorKind::ParseError, "not a decimal integer: '" + std::string(text) + "'");
    }
  }
  // cpp_int rejects a leading '+'.
  ExactInt value(std::string(text.substr(text[0] == '+' ? 1 : 0)));
  return value;
}

ExactInt ipow(const ExactInt& base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

ExactRat::ExactRat(ExactInt num, ExactInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("ExactRat: zero denominator");
  normalize();
}

void ExactRat::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  ExactInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExactInt ExactRat::to_integer() const {
  if (den_ != 1) throw std::logic_error("ExactRat::to_integer: " + str() + " is not integral");
  return num_;
}

ExactRat ExactRat::reciprocal() const {
  if (num_ == 0) throw std::domain_error("ExactRat: reciprocal of zero");
  return ExactRat(den_, num_);
}

ExactRat& ExactRat::operator+=(const ExactRat& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactRat& ExactRat::operator-=(const ExactRat& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactRat& ExactRat::operator*=(const ExactRat& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactRat& ExactRat::operator/=(const ExactRat& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("ExactRat: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

ExactRat ExactRat::operator-() const {
  ExactRat r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  const ExactInt lhs = a.num_ * b.den_;
  const ExactInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactRat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

ExactRat ExactRat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRat(parse_exact_int(text));
  ExactInt den = parse_exact_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return ExactRat(parse_exact_int(text.substr(0, slash)), std::move(den));
}

ExactInt gaussian_binomial(int n, int k, std::int64_t field_order) {
  if (field_order < 2) throw Error(ErrorKind::BadRange, "field order must be at least 2");
  if (k < 0 || k > n) return 0;
  if (2 * k > n) k = n - k;
  const ExactInt Q = field_order;
  ExactInt result = 1;
  // After step i the running value is [n, i+1]_Q, so every division is exact.
  for (int i = 0; i < k; ++i) {
    result *= ipow(Q, n - i) - 1;
    const ExactInt divisor = ipow(Q, i + 1) - 1;
    ExactInt quot;
    ExactInt rem;
    boost::multiprecision::divide_qr(result, divisor, quot, rem);
    if (rem != 0) throw std::logic_error("gaussian_binomial: inexact division");
    result = std::move(quot);
  }
  return result;
}

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, e};
}

}  // namespace hullcount
