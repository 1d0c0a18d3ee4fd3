#include "thintree/numeric.hpp"

#include <cmath>

#include "thintree/error.hpp"

namespace thintree {

std::string to_string(const Rational& q) { return q.str(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt floor(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

BigInt ceil(const Rational& q) { return -floor(-q); }

Decimal Decimal::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kParse, "empty decimal");
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_point) throw Error(ErrorCode::kParse, "bad decimal '" + std::string(text) + "'");
      seen_point = true;
      continue;
    }
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::kParse, "bad decimal '" + std::string(text) + "'");
    }
    seen_digit = true;
    if (seen_point) {
      if (++frac_digits > 6) {
        throw Error(ErrorCode::kParse, "more than 6 fractional digits in '" + std::string(text) + "'");
      }
      frac = frac * 10 + (ch - '0');
    } else {
      whole = whole * 10 + (ch - '0');
      if (whole > 9'000'000'000'000LL) throw Error(ErrorCode::kParse, "decimal too large");
    }
  }
  if (!seen_digit) throw Error(ErrorCode::kParse, "bad decimal '" + std::string(text) + "'");
  for (int i = frac_digits; i < 6; ++i) frac *= 10;
  return from_units(whole * kScale + frac);
}

std::string Decimal::str() const {
  std::int64_t whole = units_ / kScale;
  std::int64_t frac = units_ % kScale;
  if (frac < 0) {
    whole -= 1;
    frac += kScale;
  }
  std::string out = std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

namespace {

int sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

}  // namespace

Surd::Surd(Rational coef, std::int64_t radicand) : coef_(std::move(coef)), radicand_(radicand) {
  if (radicand_ < 0) throw Error(ErrorCode::kPrecondition, "negative radicand");
  if (radicand_ == 0) {
    coef_ = 0;
    radicand_ = 1;
    return;
  }
  for (std::int64_t f = 2; f * f <= radicand_; ++f) {
    while (radicand_ % (f * f) == 0) {
      radicand_ /= f * f;
      coef_ *= f;
    }
  }
}

int Surd::compare(const Rational& q) const {
  int a = sign(coef_);
  int b = sign(q);
  if (a != b) return a < b ? -1 : 1;
  if (a == 0) return 0;
  Rational lhs = coef_ * coef_ * radicand_;
  Rational rhs = q * q;
  int magnitude = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  return a > 0 ? magnitude : -magnitude;
}

int Surd::compare(const Surd& other) const {
  int a = sign(coef_);
  int b = sign(other.coef_);
  if (a != b) return a < b ? -1 : 1;
  if (a == 0) return 0;
  Rational lhs = coef_ * coef_ * radicand_;
  Rational rhs = other.coef_ * other.coef_ * other.radicand_;
  int magnitude = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  return a > 0 ? magnitude : -magnitude;
}

BigInt Surd::ceil() const {
  if (radicand_ == 1) return thintree::ceil(coef_);
  BigInt m = static_cast<std::int64_t>(std::ceil(to_double()));
  while (compare(Rational(m - 1)) <= 0) m -= 1;
  while (compare(Rational(m)) > 0) m += 1;
  return m;
}

double Surd::to_double() const {
  return thintree::to_double(coef_) * std::sqrt(static_cast<double>(radicand_));
}

std::string Surd::str() const {
  if (radicand_ == 1) return coef_.str();
  return coef_.str() + "*sqrt(" + std::to_string(radicand_) + ")";
}

}  // namespace thintree
