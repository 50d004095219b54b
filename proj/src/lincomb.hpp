#pragma once
// Sparse formal linear combinations over an ordered key type, with exact
// coefficients normalized through a Ring. Zero terms are never stored.
#include <map>

#include "ring.hpp"

namespace afs {

template <class K, class Cmp = std::less<K>>
using LinComb = std::map<K, Rat, Cmp>;

template <class K, class Cmp>
void add_term(LinComb<K, Cmp>& lc, const K& k, const Rat& c, const Ring& ring) {
  if (c == 0) return;
  auto it = lc.find(k);
  if (it == lc.end()) {
    Rat nc = ring.normalize(c);
    if (nc != 0) lc.emplace(k, nc);
  } else {
    it->second = ring.normalize(it->second + c);
    if (it->second == 0) lc.erase(it);
  }
}

template <class K, class Cmp>
void add_scaled(LinComb<K, Cmp>& lc, const LinComb<K, Cmp>& other, const Rat& s,
                const Ring& ring) {
  if (s == 0) return;
  for (const auto& [k, c] : other) add_term(lc, k, c * s, ring);
}

template <class K, class Cmp>
LinComb<K, Cmp> scaled(const LinComb<K, Cmp>& lc, const Rat& s, const Ring& ring) {
  LinComb<K, Cmp> r;
  add_scaled(r, lc, s, ring);
  return r;
}

// true when every coefficient is an integer (for U_Z integrality assertions)
template <class K, class Cmp>
bool all_integral(const LinComb<K, Cmp>& lc) {
  for (const auto& [k, c] : lc)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

}  // namespace afs
