#pragma once
// Exact integer/rational scalars and generalized binomial coefficients.
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace afs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Violated operation precondition (maps to CLI exit code 2).
struct contract_error : std::runtime_error {
  explicit contract_error(const std::string& m) : std::runtime_error(m) {}
};
// Internal consistency failure (maps to CLI exit code 1).
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& m) : std::runtime_error(m) {}
};

inline Int factorial(long long k) {
  if (k < 0) throw contract_error("factorial: negative argument");
  Int r = 1;
  for (long long t = 2; t <= k; ++t) r *= t;
  return r;
}

// Falling-factorial binomial m(m-1)...(m-k+1)/k!; integral for every m in Z.
inline Int gbinom(const Int& m, long long k) {
  if (k < 0) return 0;
  Int r = 1;
  for (long long t = 0; t < k; ++t) {
    r *= (m - t);
    r /= (t + 1);  // exact: product of t+1 consecutive integers
  }
  return r;
}

inline Int gbinom(long long m, long long k) { return gbinom(Int(m), k); }

// Multinomial (sum parts)! / prod(parts!).
inline Int multinomial(const std::vector<long long>& parts) {
  long long s = 0;
  Int denom = 1;
  for (long long p : parts) {
    if (p < 0) throw contract_error("multinomial: negative part");
    s += p;
    denom *= factorial(p);
  }
  return factorial(s) / denom;
}

inline long long mod_ll(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// gbinom(t,s) mod p computed digitwise (negative tops via gbinom(-a,s) =
// (-1)^s gbinom(a+s-1,s)); cross-checked in tests against direct reduction.
inline long long binom_mod_p(long long t, long long s, long long p) {
  if (s < 0) return 0;
  long long sign = 1;
  if (t < 0) {  // gbinom(t,s) = (-1)^s gbinom(s-1-t, s)
    t = s - 1 - t;
    if (s % 2) sign = -1;
  }
  if (s > t) return 0;
  long long r = 1;
  long long a = t, b = s;
  while (b > 0 || a > 0) {
    long long ad = a % p, bd = b % p;
    if (bd > ad) return 0;
    // small-digit binomial
    long long d = 1;
    for (long long u = 0; u < bd; ++u) {
      d = d * (ad - u) % p;
      // divide by u+1 mod p via Fermat inverse (p prime, u+1 < p)
      long long inv = 1, base = (u + 1) % p, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      d = d * inv % p;
    }
    r = r * d % p;
    a /= p;
    b /= p;
  }
  return mod_ll(sign * r, p);
}

inline long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace afs
