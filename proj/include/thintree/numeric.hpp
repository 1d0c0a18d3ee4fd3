#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace thintree {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

std::string to_string(const Rational& q);
double to_double(const Rational& q);
BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// Nonnegative decimal stored as an integer count of millionths.
class Decimal {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Decimal() = default;
  static constexpr Decimal from_units(std::int64_t units) {
    Decimal d;
    d.units_ = units;
    return d;
  }
  static constexpr Decimal from_int(std::int64_t value) {
    return from_units(value * kScale);
  }
  // Accepts `123`, `0.5`, `7.250000`; at most six fractional digits.
  static Decimal parse(std::string_view text);

  constexpr std::int64_t units() const { return units_; }
  Rational to_rational() const { return Rational(units_, kScale); }
  double to_double() const { return static_cast<double>(units_) / kScale; }
  std::string str() const;

  constexpr Decimal& operator+=(Decimal other) {
    units_ += other.units_;
    return *this;
  }
  friend constexpr Decimal operator+(Decimal a, Decimal b) { return a += b; }
  friend constexpr Decimal operator-(Decimal a, Decimal b) {
    return from_units(a.units_ - b.units_);
  }
  friend constexpr auto operator<=>(Decimal, Decimal) = default;

 private:
  std::int64_t units_ = 0;
};

/// Exact value `coef * sqrt(radicand)` with a square-free radicand. Used for
/// bounds of the form c*sqrt(genus)/k that are irrational in general.
class Surd {
 public:
  Surd() = default;
  Surd(Rational coef, std::int64_t radicand = 1);

  const Rational& coef() const { return coef_; }
  std::int64_t radicand() const { return radicand_; }

  // Sign of (*this - q).
  int compare(const Rational& q) const;
  int compare(const Surd& other) const;
  // Smallest integer not below the value.
  BigInt ceil() const;
  double to_double() const;
  // "p/q" when rational, otherwise "p/q*sqrt(r)".
  std::string str() const;

  friend Surd operator*(const Surd& s, const Rational& q) {
    return Surd(s.coef_ * q, s.radicand_);
  }
  friend Surd operator*(const Rational& q, const Surd& s) { return s * q; }
  friend Surd operator/(const Surd& s, const Rational& q) {
    return Surd(s.coef_ / q, s.radicand_);
  }

  friend bool operator<=(const Surd& s, const Rational& q) { return s.compare(q) <= 0; }
  friend bool operator<(const Surd& s, const Rational& q) { return s.compare(q) < 0; }
  friend bool operator>=(const Surd& s, const Rational& q) { return s.compare(q) >= 0; }
  friend bool operator>(const Surd& s, const Rational& q) { return s.compare(q) > 0; }
  friend bool operator<=(const Rational& q, const Surd& s) { return s.compare(q) >= 0; }
  friend bool operator<(const Rational& q, const Surd& s) { return s.compare(q) > 0; }
  friend bool operator>=(const Rational& q, const Surd& s) { return s.compare(q) <= 0; }
  friend bool operator>(const Rational& q, const Surd& s) { return s.compare(q) < 0; }

 private:
  Rational coef_ = 0;
  std::int64_t radicand_ = 1;
};

}  // namespace thintree
