#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "liework/errors.hpp"

namespace liework {

using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

/// Exact rational scalar, always in lowest terms with positive denominator.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(BigInt n) : num_(std::move(n)), den_(1) {}
  Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }
  Rat(long long n, long long d) : num_(n), den_(d) { canonicalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rat operator-() const { return Rat(raw_tag{}, -num_, den_); }

  Rat& operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
  }
  Rat& operator-=(const Rat& o) { return *this += -o; }
  Rat& operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw PreconditionError("Rat: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    // denominators are positive, so cross multiplication preserves order
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  /// Parses "p" or "p/q" with optional sign; no whitespace allowed.
  static std::optional<Rat> from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> std::optional<BigInt> {
      if (t.empty()) return std::nullopt;
      std::size_t i = 0;
      bool neg = false;
      if (t[0] == '+' || t[0] == '-') {
        neg = t[0] == '-';
        i = 1;
      }
      if (i == t.size()) return std::nullopt;
      BigInt v = 0;
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') return std::nullopt;
        v = v * 10 + (t[i] - '0');
      }
      return neg ? -v : v;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      auto n = parse_int(s);
      if (!n) return std::nullopt;
      return Rat(raw_tag{}, std::move(*n), BigInt(1));
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rat(std::move(*n), std::move(*d));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

private:
  struct raw_tag {};
  // trusted constructor: inputs already canonical
  Rat(raw_tag, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

  void canonicalize() {
    if (den_ == 0) throw PreconditionError("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    const BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

/// Canonical rendering: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
  std::string s = r.num().str();
  if (!r.is_integer()) {
    s += '/';
    s += r.den().str();
  }
  return s;
}

}  // namespace liework
