#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fiberlevel {

using Int = mpz_class;

// Exact rational number, always canonical: lowest terms, denominator >= 1.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}
  Rat(long n) : q_(n) {}
  Rat(const Int& n) : q_(n) {}
  Rat(const Int& num, const Int& den);

  // Accepts "p" or "p/q" in base 10 (optional leading '-' on either part).
  static Rat from_string(std::string_view s);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;  // throws Error on division by zero
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return q_ == o.q_; }
  bool operator!=(const Rat& o) const { return q_ != o.q_; }
  bool operator<(const Rat& o) const { return q_ < o.q_; }
  bool operator<=(const Rat& o) const { return q_ <= o.q_; }
  bool operator>(const Rat& o) const { return q_ > o.q_; }
  bool operator>=(const Rat& o) const { return q_ >= o.q_; }

  Rat inverse() const;  // throws Error on zero
  Rat abs() const;

  // "p" when integral, otherwise "p/q".
  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

// Parses a base-10 integer literal; throws ParseError on anything else.
Int int_from_string(std::string_view s);

}  // namespace fiberlevel
