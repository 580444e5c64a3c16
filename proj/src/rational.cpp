#include "cubetile/rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cubetile {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces in 128-bit space first so the constructor's narrowing checks see
// the smallest representative.
Rational make_reduced(i128 num, i128 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = narrow(-static_cast<i128>(num));
    den = narrow(-static_cast<i128>(den));
  }
  long long g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<i128>(num_));
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return make_reduced(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                      static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make_reduced(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                      static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator*(long long k) const {
  return make_reduced(static_cast<i128>(num_) * k, den_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  i128 lhs = static_cast<i128>(num_) * o.den_;
  i128 rhs = static_cast<i128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::mod(long long m) const {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  i128 span = static_cast<i128>(m) * den_;
  i128 r = static_cast<i128>(num_) % span;
  if (r < 0) r += span;
  return make_reduced(r, den_);
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational parse_rational(const std::string& token) {
  auto bad = [&] { throw std::invalid_argument("bad fraction '" + token + "'"); };
  auto slash = token.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == token.size()) bad();
  errno = 0;
  char* end = nullptr;
  long long num = std::strtoll(token.c_str(), &end, 10);
  if (errno != 0 || end != token.c_str() + slash) bad();
  long long den = std::strtoll(token.c_str() + slash + 1, &end, 10);
  if (errno != 0 || *end != '\0' || den < 1) bad();
  return Rational(num, den);
}

long long lcm_positive(long long a, long long b) {
  return narrow(static_cast<i128>(a) / std::gcd(a, b) * b);
}

}  // namespace cubetile
