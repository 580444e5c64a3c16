#pragma once

#include <compare>
#include <string>

namespace cubetile {

/// Exact fraction with 64-bit numerator and positive 64-bit denominator,
/// always kept in lowest terms. Intermediates are computed in 128-bit
/// arithmetic; a result that does not fit back into 64 bits throws
/// std::overflow_error. Coordinates in this project stay tiny, so the
/// guard exists to make silent wraparound impossible, not to be hit.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(long long k) const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  /// Largest integer <= *this.
  long long floor() const;

  /// Fractional part, in [0, 1).
  Rational frac() const { return mod(1); }

  /// Representative of *this modulo the positive integer m, in [0, m).
  Rational mod(long long m) const;

  /// Serializes as "num/den", both parts always present ("0/1", "-3/2").
  std::string str() const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Parses a "p/q" token, q >= 1, reducing to lowest terms. The slash and
/// denominator are mandatory. Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& token);

long long lcm_positive(long long a, long long b);

}  // namespace cubetile
