#include "reylie/rational.hpp"

#include "reylie/error.hpp"

#include <cctype>
#include <ostream>

namespace reylie {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) throw InputError("not a rational: \"" + std::string(whole) + "\"");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

} // namespace

Rat::Rat(std::int64_t n) : value_(static_cast<long>(n)) {}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpq_class v;
  if (slash == std::string_view::npos) {
    v = mpq_class(parse_integer(text, text));
  } else {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("rational with zero denominator: \"" + std::string(text) + "\"");
    v = mpq_class(num, den);
    v.canonicalize();
  }
  return Rat(std::move(v));
}

std::string Rat::str() const { return value_.get_str(); }

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InputError("division by zero");
  value_ /= o.value_;
  return *this;
}

void Rat::add_product(const Rat& b, const Rat& c) {
  if (b.is_zero() || c.is_zero()) return;
  value_ += b.value_ * c.value_;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace reylie
