#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace sugeq {

// Exact rational in canonical reduced form, backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: integers convert freely
  Rational(long numerator, long denominator);

  // "p/q", "p", optionally signed. Zero denominators and trailing garbage are
  // rejected with ErrorCode::kParse.
  static Rational parse(std::string_view text);
  // Exact conversion of a finite decimal literal such as "-0.125" or "3e-2".
  static Rational parse_decimal(std::string_view text);
  // Exact binary value of a finite double.
  static Rational from_double(double value);

  std::string str() const;
  double to_double() const { return value_.get_d(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class value);
  mpq_class value_;
};

inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

// A rational extended by the two sentinels -inf < q < +inf.
class ExtendedValue {
 public:
  ExtendedValue(Rational value)  // NOLINT: finite values convert implicitly
      : kind_(Kind::kFinite), value_(std::move(value)) {}
  ExtendedValue(long value) : ExtendedValue(Rational(value)) {}  // NOLINT

  static ExtendedValue neg_inf() { return ExtendedValue(Kind::kNegInf); }
  static ExtendedValue pos_inf() { return ExtendedValue(Kind::kPosInf); }

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  // Throws ErrorCode::kInvalidArgument on a sentinel.
  const Rational& finite() const;

  std::string str() const;

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    return a.kind_ == b.kind_ && (!a.is_finite() || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtendedValue& a,
                                          const ExtendedValue& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.is_finite()) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedValue& v) {
    return os << v.str();
  }

 private:
  enum class Kind : int { kNegInf = -1, kFinite = 0, kPosInf = 1 };
  explicit ExtendedValue(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

// min(v, e) for finite v; the result is finite unless e is -inf.
ExtendedValue min(const Rational& v, const ExtendedValue& e);

}  // namespace sugeq

template <>
struct std::hash<sugeq::Rational> {
  std::size_t operator()(const sugeq::Rational& r) const noexcept;
};
