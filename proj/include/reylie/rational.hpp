#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace reylie {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rat {
public:
  Rat() = default;
  Rat(std::int64_t n); // NOLINT(google-explicit-constructor): integer literals read naturally
  Rat(std::int64_t num, std::int64_t den);

  /// Parses "p", "-p" or "p/q". Throws InputError on anything else or q == 0.
  static Rat parse(std::string_view text);

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }

  /// a += b * c without a temporary Rat; the hot path of every contraction.
  void add_product(const Rat& b, const Rat& c);

private:
  explicit Rat(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace reylie
