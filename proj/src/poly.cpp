#include "fiberlevel/poly.hpp"

#include <algorithm>
#include <sstream>

#include "fiberlevel/detail/int_poly.hpp"
#include "fiberlevel/errors.hpp"

namespace fiberlevel {

RatPoly::RatPoly(const Rat& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

void RatPoly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::x() { return monomial(1); }

RatPoly RatPoly::monomial(size_t k, const Rat& c) {
  if (c.is_zero()) return RatPoly();
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(Rat::from_string(s));
  return RatPoly(std::move(v));
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  if (s.is_zero()) return RatPoly();
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::shifted(size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : RatPoly();
  std::vector<Rat> v(c_.size() + k, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(v));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * inner + RatPoly(c_[i]);
  return r;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) throw Error("monic of zero polynomial");
  return *this * leading().inverse();
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly r(Rat(1));
  RatPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::vector<std::string> RatPoly::coeff_strings() const {
  std::vector<std::string> v;
  v.reserve(c_.size());
  for (const Rat& c : c_) v.push_back(c.str());
  return v;
}

std::string RatPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Rat a = c_[i];
    if (first) {
      if (a.sign() < 0) out << "-";
      first = false;
    } else {
      out << (a.sign() < 0 ? " - " : " + ");
    }
    Rat mag = a.abs();
    if (i == 0 || mag != Rat(1)) out << mag.str();
    if (i > 0) {
      if (mag != Rat(1)) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> rem(a.coeffs());
  int db = b.degree();
  Rat inv_lead = b.leading().inverse();
  std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    Rat q = rem[i] * inv_lead;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero())
    throw InexactDivisionError("inexact polynomial division: deg rem = " +
                               std::to_string(r.degree()));
  return q;
}

bool divides(const RatPoly& d, const RatPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return divrem(a, d).second.is_zero();
}

namespace {

// Pseudo-remainder of primitive integer polynomials, made primitive again.
detail::IntVec prem_primitive(const detail::IntVec& a, const detail::IntVec& b) {
  detail::IntVec r = a;
  const Int& lb = b.back();
  int db = detail::ip_degree(b);
  while (detail::ip_degree(r) >= db) {
    int dr = detail::ip_degree(r);
    Int lr = r.back();
    for (Int& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b[j];
    detail::ip_strip(r);
  }
  detail::ip_make_primitive(r);
  return r;
}

}  // namespace

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero()) return b.is_zero() ? RatPoly() : b.monic();
  if (b.is_zero()) return a.monic();
  detail::IntVec A = primitive_int(a).first;
  detail::IntVec B = primitive_int(b).first;
  if (detail::ip_degree(A) < detail::ip_degree(B)) std::swap(A, B);
  while (!B.empty()) {
    detail::IntVec R = prem_primitive(A, B);
    A = std::move(B);
    B = std::move(R);
  }
  return poly_from_int(A).monic();
}

std::vector<std::pair<RatPoly, unsigned>> squarefree_decompose(const RatPoly& a) {
  std::vector<std::pair<RatPoly, unsigned>> out;
  if (a.degree() < 1) return out;
  RatPoly f = a.monic();
  RatPoly a0 = poly_gcd(f, f.derivative());
  RatPoly b = exact_div(f, a0);
  RatPoly c = exact_div(f.derivative(), a0);
  RatPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    RatPoly g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

std::pair<std::vector<Int>, Rat> primitive_int(const RatPoly& a) {
  if (a.is_zero()) return {{}, Rat(0)};
  Int lcm(1);
  for (const Rat& c : a.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
  detail::IntVec v;
  v.reserve(a.coeffs().size());
  for (const Rat& c : a.coeffs()) {
    Rat scaled = c * Rat(lcm);
    v.push_back(scaled.num());
  }
  Int g = detail::ip_content(v);
  if (v.back() < 0) g = -g;
  for (Int& c : v) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    c = q;
  }
  return {std::move(v), Rat(g, lcm)};
}

RatPoly poly_from_int(const std::vector<Int>& c) {
  std::vector<Rat> v;
  v.reserve(c.size());
  for (const Int& x : c) v.push_back(Rat(x));
  return RatPoly(std::move(v));
}

bool poly_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace fiberlevel
