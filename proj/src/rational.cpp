#include "amply/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "amply/error.hpp"

namespace amply {
namespace {

WideInt gcd_wide(WideInt a, WideInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    WideInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr WideInt kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(WideInt num, WideInt den) {
  if (den == 0) throw InputError("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  WideInt g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < -kMax || den > kMax) {
    throw OverflowError("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<WideInt>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  WideInt n = static_cast<WideInt>(num_) * rhs.den_ + static_cast<WideInt>(rhs.num_) * den_;
  WideInt d = static_cast<WideInt>(den_) * rhs.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  // Cross-reduce first so that products of reduced fractions stay small.
  WideInt g1 = gcd_wide(num_, rhs.den_);
  WideInt g2 = gcd_wide(rhs.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  WideInt n = (num_ / g1) * (rhs.num_ / g2);
  WideInt d = (den_ / g2) * (rhs.den_ / g1);
  return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw InputError("division by zero");
  return *this *= from_wide(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  WideInt lhs = static_cast<WideInt>(a.num_) * b.den_;
  WideInt rhs = static_cast<WideInt>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("malformed rational '" + std::string(text) + "': zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  WideInt g = gcd_wide(a, b);
  if (g == 0) return 0;
  WideInt l = static_cast<WideInt>(a) / g * b;
  if (l < 0) l = -l;
  if (l > kMax) throw OverflowError("lcm overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace amply
