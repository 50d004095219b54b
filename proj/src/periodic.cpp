#include "periodic.hpp"

#include <algorithm>
#include <sstream>

namespace afs {

PVec PVec::operator+(const PVec& o) const {
  if (n != o.n) throw contract_error("vector rank mismatch");
  PVec r(n);
  for (int t = 0; t < n; ++t) r.v[t] = v[t] + o.v[t];
  return r;
}

PVec PVec::operator-(const PVec& o) const {
  if (n != o.n) throw contract_error("vector rank mismatch");
  PVec r(n);
  for (int t = 0; t < n; ++t) r.v[t] = v[t] - o.v[t];
  return r;
}

std::string PVec::str() const {
  std::ostringstream os;
  os << '(';
  for (int t = 0; t < n; ++t) os << (t ? "," : "") << v[t];
  os << ')';
  return os.str();
}

bool leq_weights(const PVec& a, const PVec& b) {
  if (a.n != b.n) throw contract_error("vector rank mismatch");
  for (int t = 0; t < a.n; ++t)
    if (a.v[t] > b.v[t]) return false;
  return true;
}

bool lt_weights(const PVec& a, const PVec& b) {
  return leq_weights(a, b) && !(a == b);
}

Int vec_binom(const PVec& mu, const PVec& lam) {
  if (mu.n != lam.n) throw contract_error("vector rank mismatch");
  if (!lam.nonneg()) throw contract_error("vec_binom: bottom must be >= 0");
  Int r = 1;
  for (int t = 0; t < mu.n; ++t) {
    r *= gbinom(Int(mu.v[t]), lam.v[t]);
    if (r == 0) return 0;
  }
  return r;
}

long long PMat::entry(long long i, long long j) const {
  if (i == j) return diag.at(i);
  // shift so the row lands in 1..n
  long long s = i - diag.res(i);
  long long i0 = i - s, j0 = j - s;
  for (const auto& e : off)
    if (e.i == i0 && e.j == j0) return e.a;
  return 0;
}

void PMat::add(long long i, long long j, long long a) {
  if (a == 0) return;
  if (i == j) {
    diag.at_res(i) += a;
    return;
  }
  long long s = i - diag.res(i);
  OffEntry e{int(i - s), j - s, a};
  auto it = std::lower_bound(off.begin(), off.end(), e,
                             [](const OffEntry& x, const OffEntry& y) {
                               return std::pair(x.i, x.j) < std::pair(y.i, y.j);
                             });
  if (it != off.end() && it->i == e.i && it->j == e.j) {
    it->a += a;
    if (it->a == 0) off.erase(it);
  } else {
    off.insert(it, e);
  }
}

PMat PMat::transpose() const {
  PMat r(n);
  r.diag = diag;
  for (const auto& e : off) r.add(e.j, e.i, e.a);
  return r;
}

PMat PMat::operator+(const PMat& o) const {
  if (n != o.n) throw contract_error("matrix rank mismatch");
  PMat r = *this;
  r.diag = diag + o.diag;
  for (const auto& e : o.off) r.add(e.i, e.j, e.a);
  return r;
}

PVec PMat::ro() const {
  PVec r = diag;
  for (const auto& e : off) r.v[e.i - 1] += e.a;
  return r;
}

PVec PMat::co() const {
  PVec r = diag;
  for (const auto& e : off) r.at_res(e.j) += e.a;
  return r;
}

long long PMat::sigma() const { return diag.sum() + sigma_off(); }

long long PMat::sigma_off() const {
  long long s = 0;
  for (const auto& e : off) s += e.a;
  return s;
}

PVec PMat::sigma_vec() const {
  // sigma_i = sum_{j<i} a_{i,j}  +  sum_{j<i} a_{j,i}; the column part comes
  // from stored entries (k,l) with l = i mod n shifted so that k < l.
  PVec s(n);
  for (const auto& e : off) {
    if (e.j < e.i) s.v[e.i - 1] += e.a;  // row part at residue i
    if (e.i < e.j) s.at_res(e.j) += e.a; // column part at residue j
  }
  return s;
}

PMat PMat::upper() const {
  PMat r(n);
  for (const auto& e : off)
    if (e.i < e.j) r.add(e.i, e.j, e.a);
  return r;
}

PMat PMat::lower() const {
  PMat r(n);
  for (const auto& e : off)
    if (e.i > e.j) r.add(e.i, e.j, e.a);
  return r;
}

PMat PMat::offdiag_part() const {
  PMat r(n);
  r.off = off;
  return r;
}

bool PMat::nonneg_off() const {
  for (const auto& e : off)
    if (e.a < 0) return false;
  return true;
}

bool PMat::zero_diag() const {
  for (long long d : diag.v)
    if (d != 0) return false;
  return true;
}

bool PMat::upper_strict() const {
  if (!zero_diag()) return false;
  for (const auto& e : off)
    if (e.i > e.j) return false;
  return true;
}

bool PMat::lower_strict() const {
  if (!zero_diag()) return false;
  for (const auto& e : off)
    if (e.i < e.j) return false;
  return true;
}

bool PMat::bounded(long long r) const {
  return nonneg_off() && diag.nonneg() && sigma() == r;
}

bool PMat::entry_bound(long long q) const {
  for (const auto& e : off)
    if (e.a >= q || e.a < 0) return false;
  return true;
}

PMat PMat::unit(int n, long long i, long long j, long long a) {
  PMat r(n);
  r.add(i, j, a);
  return r;
}

PMat PMat::diagonal(const PVec& d) {
  PMat r(d.n);
  r.diag = d;
  return r;
}

std::string PMat::str() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& e : off) {
    if (!first) os << '+';
    first = false;
    if (e.a != 1) os << e.a;
    os << "E(" << e.i << ',' << e.j << ')';
  }
  bool dz = zero_diag();
  if (!dz || first) {
    if (!first) os << '+';
    os << "diag" << diag.str();
  }
  os << ']';
  return os.str();
}

std::vector<PVec> compositions(int n, long long m) {
  std::vector<PVec> out;
  if (m < 0) return out;
  PVec cur(n);
  // lexicographic recursive fill
  auto rec = [&](auto&& self, int pos, long long rem) -> void {
    if (pos == n - 1) {
      cur.v[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (long long x = 0; x <= rem; ++x) {
      cur.v[pos] = x;
      self(self, pos + 1, rem - x);
    }
  };
  rec(rec, 0, m);
  return out;
}

std::vector<PMat> enumerate_band(int n, long long r, long long window) {
  std::vector<std::pair<int, long long>> slots;  // (i, j), diagonal first
  for (int i = 1; i <= n; ++i) slots.push_back({i, i});
  for (int i = 1; i <= n; ++i)
    for (long long j = i - window; j <= i + window; ++j)
      if (j != i) slots.push_back({i, j});
  std::vector<PMat> out;
  PMat cur(n);
  auto rec = [&](auto&& self, size_t pos, long long rem) -> void {
    if (pos == slots.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    // remaining slots can absorb anything; prune only at the end
    for (long long x = 0; x <= rem; ++x) {
      if (x) cur.add(slots[pos].first, slots[pos].second, x);
      self(self, pos + 1, rem - x);
      if (x) cur.add(slots[pos].first, slots[pos].second, -x);
    }
  };
  rec(rec, 0, r);
  return out;
}

}  // namespace afs
