#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace latpath {

// All engine arithmetic is exact. Int/Rat are arbitrary precision; Rat is
// kept canonical (gcd-reduced) by gmpxx after every arithmetic operation.
using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int ceil_rat(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int pow2(unsigned long exp) { return pow_int(Int(2), exp); }

// Smallest l with 2^l >= x; requires x >= 1.
inline unsigned long ceil_log2(const Int& x) {
  size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);  // 2^(bits-1) <= x < 2^bits
  Int lo = pow2(static_cast<unsigned long>(bits - 1));
  return x == lo ? static_cast<unsigned long>(bits - 1)
                 : static_cast<unsigned long>(bits);
}

inline Int inf_norm(const IVec& v) {
  Int m = 0;
  for (const Int& x : v) {
    Int a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

inline Rat inf_norm(const QVec& v) {
  Rat m = 0;
  for (const Rat& x : v) {
    Rat a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

inline Int one_norm(const IVec& v) {
  Int s = 0;
  for (const Int& x : v) s += abs(x);
  return s;
}

inline bool is_zero(const IVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec to_rational(const IVec& v) {
  QVec r;
  r.reserve(v.size());
  for (const Int& x : v) r.emplace_back(x);
  return r;
}

// Exact integer dot of an integer row with a rational point.
inline Rat dot_iq(const IVec& a, const QVec& x) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
  return s;
}

std::string to_string(const Int& x);
std::string to_string(const Rat& x);
std::string to_string(const IVec& v);

}  // namespace latpath
