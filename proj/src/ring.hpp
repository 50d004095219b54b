#pragma once
// Coefficient rings: Z, Q, and prime fields F_p. Coefficients are carried as
// exact rationals everywhere; the ring normalizes after each operation (for
// F_p: representative in [0,p), denominators inverted mod p).
#include "intmath.hpp"

namespace afs {

enum class RingKind { Z, Q, Fp };

struct Ring {
  RingKind kind = RingKind::Z;
  long long p = 0;

  static Ring Z() { return {RingKind::Z, 0}; }
  static Ring Q() { return {RingKind::Q, 0}; }
  static Ring Fp(long long p) {
    if (p < 2) throw contract_error("Fp: p must be a prime >= 2");
    return {RingKind::Fp, p};
  }

  bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }

  Rat normalize(const Rat& c) const {
    if (kind != RingKind::Fp) return c;
    Int num = boost::multiprecision::numerator(c) % p;
    Int den = boost::multiprecision::denominator(c) % p;
    long long nu = mod_ll(num.convert_to<long long>(), p);
    long long de = mod_ll(den.convert_to<long long>(), p);
    if (de == 0) throw contract_error("Fp: denominator divisible by p");
    long long inv = 1, base = de, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return Rat(nu * inv % p);
  }

  bool is_zero(const Rat& c) const { return normalize(c) == 0; }

  std::string name() const {
    switch (kind) {
      case RingKind::Z: return "Z";
      case RingKind::Q: return "Q";
      default: return "Fp:" + std::to_string(p);
    }
  }
};

}  // namespace afs
