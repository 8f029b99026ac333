#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fiberlevel/rat.hpp"

namespace fiberlevel {

// Univariate polynomial over Q. Coefficients are stored by ascending power
// with no trailing zeros, so the zero polynomial has an empty vector and
// degree() == -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(const Rat& constant);
  explicit RatPoly(std::vector<Rat> coeffs);

  static RatPoly x();
  static RatPoly monomial(size_t k, const Rat& c = Rat(1));
  static RatPoly from_strings(const std::vector<std::string>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == Rat(1); }
  Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const Rat& leading() const;  // requires nonzero
  const std::vector<Rat>& coeffs() const { return c_; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const Rat& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

  RatPoly shifted(size_t k) const;  // multiply by x^k
  RatPoly derivative() const;
  Rat eval(const Rat& x) const;
  RatPoly compose(const RatPoly& inner) const;
  RatPoly monic() const;  // requires nonzero
  RatPoly pow(unsigned e) const;

  std::vector<std::string> coeff_strings() const;
  std::string str(std::string_view var = "x") const;

 private:
  void strip();
  std::vector<Rat> c_;
};

// Quotient and remainder with deg(rem) < deg(b); throws Error when b is zero.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);

// Exact quotient; throws InexactDivisionError on a nonzero remainder.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);

bool divides(const RatPoly& d, const RatPoly& a);

// Monic gcd (zero if both inputs are zero). Uses a primitive PRS over Z
// internally to keep intermediate coefficients in check.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// Yun decomposition of monic(a): returns (part, multiplicity) pairs with
// squarefree, pairwise coprime, monic parts whose weighted product is
// monic(a). Constant and zero inputs yield an empty list.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decompose(const RatPoly& a);

// Writes a as unit * P with P primitive over Z (content 1, positive leading
// coefficient). The zero polynomial returns ({}, 0).
std::pair<std::vector<Int>, Rat> primitive_int(const RatPoly& a);

RatPoly poly_from_int(const std::vector<Int>& c);

// Total order used everywhere a factor list must be deterministic:
// by degree, then leading coefficient downwards.
bool poly_less(const RatPoly& a, const RatPoly& b);

}  // namespace fiberlevel
