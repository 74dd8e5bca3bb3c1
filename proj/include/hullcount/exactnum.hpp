#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace hullcount {

/// Arbitrary-precision signed integer.
using ExactInt = boost::multiprecision::cpp_int;

std::string to_decimal(const ExactInt& value);
ExactInt parse_exact_int(std::string_view text);

/// base^exp for exp >= 0.
ExactInt ipow(const ExactInt& base, int exp);

/// Reduced rational with positive denominator. Equal values always have
/// identical representations, so `==` is structural.
class ExactRat {
 public:
  ExactRat() : num_(0), den_(1) {}
  ExactRat(const ExactInt& value) : num_(value), den_(1) {}  // NOLINT(implicit)
  ExactRat(std::int64_t value) : num_(value), den_(1) {}     // NOLINT(implicit)
  ExactRat(int value) : num_(value), den_(1) {}              // NOLINT(implicit)
  ExactRat(ExactInt num, ExactInt den);

  const ExactInt& num() const noexcept { return num_; }
  const ExactInt& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Exact conversion; throws std::logic_error if the value is not integral.
  ExactInt to_integer() const;

  ExactRat reciprocal() const;

  ExactRat& operator+=(const ExactRat& rhs);
  ExactRat& operator-=(const ExactRat& rhs);
  ExactRat& operator*=(const ExactRat& rhs);
  ExactRat& operator/=(const ExactRat& rhs);

  friend ExactRat operator+(ExactRat lhs, const ExactRat& rhs) { return lhs += rhs; }
  friend ExactRat operator-(ExactRat lhs, const ExactRat& rhs) { return lhs -= rhs; }
  friend ExactRat operator*(ExactRat lhs, const ExactRat& rhs) { return lhs *= rhs; }
  friend ExactRat operator/(ExactRat lhs, const ExactRat& rhs) { return lhs /= rhs; }
  ExactRat operator-() const;

  friend bool operator==(const ExactRat& a, const ExactRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b);

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;
  static ExactRat parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const ExactRat& r) { return os << r.str(); }

 private:
  void normalize();

  ExactInt num_;
  ExactInt den_;
};

/// Number of k-dimensional subspaces of an n-dimensional space over a field
/// with Q elements. Returns 0 when k < 0 or k > n.
ExactInt gaussian_binomial(int n, int k, std::int64_t field_order);

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

/// Decomposes q = p^e; nullopt when q is not a prime power (q < 2 included).
std::optional<PrimePower> prime_power(std::int64_t q);

bool is_prime(std::int64_t value);

}  // namespace hullcount
