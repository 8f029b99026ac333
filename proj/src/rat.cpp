#include "fiberlevel/rat.hpp"

#include <cctype>

#include "fiberlevel/errors.hpp"

namespace fiberlevel {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Int int_from_string(std::string_view s) {
  if (s.empty()) throw ParseError("empty integer literal");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bare sign in integer literal");
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParseError("bad integer literal: " + std::string(s));
  return Int(std::string(s), 10);
}

Rat Rat::from_string(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  Int den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational literal: " + std::string(s));
  return Rat(num, den);
}

Rat Rat::operator-() const {
  Rat r;
  r.q_ = -q_;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  Rat r;
  r.q_ = q_ + o.q_;
  return r;
}

Rat Rat::operator-(const Rat& o) const {
  Rat r;
  r.q_ = q_ - o.q_;
  return r;
}

Rat Rat::operator*(const Rat& o) const {
  Rat r;
  r.q_ = q_ * o.q_;
  return r;
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw Error("rational division by zero");
  Rat r;
  r.q_ = q_ / o.q_;
  return r;
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  return Rat(den(), num());
}

Rat Rat::abs() const {
  Rat r;
  r.q_ = ::abs(q_);
  return r;
}

}  // namespace fiberlevel
