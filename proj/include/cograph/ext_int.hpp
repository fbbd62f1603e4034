#pragma once

// Extended integers {-inf} u Z u {+inf} and exact rationals.

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cograph {

/// Integer extended by both infinities. Ordering is the natural one,
/// -inf < every finite value < +inf.
class ExtInt {
 public:
  using rep = std::int64_t;

  constexpr ExtInt() = default;
  constexpr ExtInt(rep v) : v_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtInt pos_inf() { return ExtInt(kPos); }
  static constexpr ExtInt neg_inf() { return ExtInt(kNeg); }

  constexpr bool is_finite() const { return v_ != kPos && v_ != kNeg; }
  constexpr bool is_pos_inf() const { return v_ == kPos; }
  constexpr bool is_neg_inf() const { return v_ == kNeg; }

  constexpr rep value() const {
    if (!is_finite()) throw std::logic_error("ExtInt::value on infinite value");
    return v_;
  }
  constexpr rep raw() const { return v_; }

  constexpr auto operator<=>(const ExtInt&) const = default;

  // -inf is absorbing, then +inf.
  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return ExtInt(a.v_ + b.v_);
  }

  /// Subtract a finite amount; infinities are unchanged.
  constexpr ExtInt minus(rep k) const { return is_finite() ? ExtInt(v_ - k) : *this; }

  std::string to_string() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(v_);
  }

  /// Accepts "inf", "+inf", "-inf" and decimal integers.
  static ExtInt parse(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s == "inf" || s == "+inf" || s == "∞") return pos_inf();
    if (s == "-inf" || s == "−∞" || s == "-∞") return neg_inf();
    rep v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v == kPos || v == kNeg)
      throw std::invalid_argument("not an extended integer: '" + std::string(s) + "'");
    return ExtInt(v);
  }

 private:
  static constexpr rep kPos = std::numeric_limits<rep>::max();
  static constexpr rep kNeg = std::numeric_limits<rep>::min();
  rep v_ = 0;
};

inline constexpr ExtInt kPosInf = ExtInt::pos_inf();
inline constexpr ExtInt kNegInf = ExtInt::neg_inf();

inline std::ostream& operator<<(std::ostream& os, ExtInt x) { return os << x.to_string(); }

/// Exact rational with a positive, reduced denominator.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by intent
  constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend constexpr bool operator==(Rational a, Rational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// "p", "p/q" or "-p/q".
  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    auto int_of = [&](std::string_view part) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
        throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
      return v;
    };
    if (slash == std::string_view::npos) return Rational(int_of(s));
    return Rational(int_of(s.substr(0, slash)), int_of(s.substr(slash + 1)));
  }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace cograph
