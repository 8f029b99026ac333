#pragma once

#include <vector>

#include "fiberlevel/rat.hpp"

// Coefficient-vector helpers over Z shared by the gcd and factorization
// internals. Vectors are ascending-power and may carry trailing zeros until
// ip_strip is applied.
namespace fiberlevel::detail {

using IntVec = std::vector<Int>;

inline void ip_strip(IntVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int ip_degree(const IntVec& a) { return static_cast<int>(a.size()) - 1; }

inline IntVec ip_mul(const IntVec& a, const IntVec& b) {
  if (a.empty() || b.empty()) return {};
  IntVec r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ip_strip(r);
  return r;
}

inline IntVec ip_sub(const IntVec& a, const IntVec& b) {
  IntVec r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ip_strip(r);
  return r;
}

inline IntVec ip_scale(const IntVec& a, const Int& s) {
  if (s == 0) return {};
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

inline Int ip_content(const IntVec& a) {
  Int g = 0;
  for (const Int& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides by the content and fixes the sign of the leading coefficient.
inline void ip_make_primitive(IntVec& a) {
  ip_strip(a);
  if (a.empty()) return;
  Int g = ip_content(a);
  if (a.back() < 0) g = -g;
  if (g == 1) return;
  for (Int& c : a) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    c = q;
  }
}

}  // namespace fiberlevel::detail
