#include "sugeq/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "sugeq/error.hpp"

namespace sugeq {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by digits.
bool signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

mpz_class integer_of(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

[[noreturn]] void bad_rational(std::string_view text, const char* why) {
  throw Error(ErrorCode::kParse,
              "invalid rational \"" + std::string(text) + "\": " + why);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!signed_digits(text)) bad_rational(text, "expected p or p/q");
    return Rational(mpq_class(integer_of(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!signed_digits(num) || !all_digits(den)) {
    bad_rational(text, "expected p or p/q");
  }
  mpz_class d = integer_of(den);
  if (d == 0) bad_rational(text, "zero denominator");
  return Rational(mpq_class(integer_of(num), d));
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view s = text;
  if (s.find('/') != std::string_view::npos) return parse(text);
  std::string_view exponent;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = s.substr(e + 1);
    s = s.substr(0, e);
    if (!signed_digits(exponent)) bad_rational(text, "bad exponent");
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view whole = s;
  std::string_view frac;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    whole = s.substr(0, dot);
    frac = s.substr(dot + 1);
  }
  if (whole.empty() && frac.empty()) bad_rational(text, "no digits");
  if ((!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac))) {
    bad_rational(text, "expected a decimal literal");
  }
  mpz_class digits(std::string(whole) + std::string(frac), 10);
  long shift = -static_cast<long>(frac.size());
  if (!exponent.empty()) {
    if (exponent.size() > 6) bad_rational(text, "exponent out of range");
    shift += std::stol(std::string(exponent));
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10,
                static_cast<unsigned long>(std::labs(shift)));
  mpq_class q =
      shift >= 0 ? mpq_class(digits * scale) : mpq_class(digits, scale);
  if (negative) q = -q;
  return Rational(q);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite double");
  }
  return Rational(mpq_class(value));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

const Rational& ExtendedValue::finite() const {
  if (!is_finite()) {
    throw Error(ErrorCode::kInvalidArgument,
                "infinite value " + str() + " where a finite one is required");
  }
  return value_;
}

std::string ExtendedValue::str() const {
  switch (kind_) {
    case Kind::kNegInf:
      return "-inf";
    case Kind::kPosInf:
      return "+inf";
    case Kind::kFinite:
      break;
  }
  return value_.str();
}

ExtendedValue min(const Rational& v, const ExtendedValue& e) {
  if (e.is_neg_inf()) return e;
  if (e.is_pos_inf()) return v;
  return min(v, e.finite());
}

}  // namespace sugeq

std::size_t std::hash<sugeq::Rational>::operator()(
    const sugeq::Rational& r) const noexcept {
  const auto& q = r.raw();
  std::size_t h = std::hash<std::string>{}(q.get_num().get_str(16));
  return h * 31 + std::hash<std::string>{}(q.get_den().get_str(16));
}
