#pragma once
// n-periodic integer vectors and matrices.
//
// A PeriodicVector stores one period (lambda_1..lambda_n) of a vector
// extended by lambda_i = lambda_{i-n}.  A PeriodicMatrix stores a diagonal
// vector plus a finite canonical list of off-diagonal entries (i,j,a) with
// 1 <= i <= n, j in Z, j != i; the entries at (i+sn, j+sn) are implied.
#include <compare>
#include <string>
#include <vector>

#include "intmath.hpp"

namespace afs {

struct PVec {
  int n = 0;
  std::vector<long long> v;  // size n

  PVec() = default;
  PVec(int n_, long long fill = 0) : n(n_), v(n_, fill) {}
  PVec(int n_, std::vector<long long> vv) : n(n_), v(std::move(vv)) {}

  // residue index 1..n of any integer position
  int res(long long i) const { return int(mod_ll(i - 1, n)) + 1; }
  long long at(long long i) const { return v[res(i) - 1]; }
  long long& at_res(long long i) { return v[res(i) - 1]; }

  long long sum() const {
    long long s = 0;
    for (long long x : v) s += x;
    return s;
  }
  bool nonneg() const {
    for (long long x : v)
      if (x < 0) return false;
    return true;
  }

  PVec operator+(const PVec& o) const;
  PVec operator-(const PVec& o) const;
  PVec operator*(long long s) const {
    PVec r = *this;
    for (auto& x : r.v) x *= s;
    return r;
  }
  bool operator==(const PVec& o) const { return n == o.n && v == o.v; }
  auto operator<=>(const PVec& o) const = default;

  // unit vector at residue class of i
  static PVec eps(int n, long long i) {
    PVec e(n);
    e.at_res(i) = 1;
    return e;
  }
  // componentwise residues in [0, q)
  PVec bar(long long q) const {
    PVec r(n);
    for (int t = 0; t < n; ++t) r.v[t] = mod_ll(v[t], q);
    return r;
  }
  std::string str() const;
};

// lambda <= mu componentwise over one period; lt is <= and !=
bool leq_weights(const PVec& a, const PVec& b);
bool lt_weights(const PVec& a, const PVec& b);

// prod_i gbinom(mu_i, lambda_i) over one period; requires lambda >= 0
Int vec_binom(const PVec& mu, const PVec& lam);

struct OffEntry {
  int i;        // 1..n
  long long j;  // any integer != i
  long long a;  // nonzero
  auto operator<=>(const OffEntry&) const = default;
};

struct PMat {
  int n = 0;
  PVec diag;
  std::vector<OffEntry> off;  // sorted by (i,j), no zeros

  PMat() = default;
  explicit PMat(int n_) : n(n_), diag(n_) {}

  // entry at arbitrary integer position (i,j), using periodicity
  long long entry(long long i, long long j) const;
  // add a at position (i,j) (any integers); folds into canonical storage
  void add(long long i, long long j, long long a);

  PMat transpose() const;
  PMat operator+(const PMat& o) const;

  PVec ro() const;  // row sums per residue
  PVec co() const;  // column sums per residue
  long long sigma() const;         // sum of all entries over one period
  long long sigma_off() const;     // off-diagonal part only
  PVec sigma_vec() const;          // i -> sum_{j<i} (a_{i,j} + a_{j,i})

  PMat upper() const;  // entries with i<j, zero diagonal
  PMat lower() const;  // entries with i>j, zero diagonal
  PMat offdiag_part() const;

  bool nonneg_off() const;
  bool zero_diag() const;
  bool upper_strict() const;
  bool lower_strict() const;
  bool bounded(long long r) const;        // all entries >= 0 and sigma == r
  bool entry_bound(long long q) const;    // all off-diagonal entries < q

  bool operator==(const PMat& o) const {
    return n == o.n && diag == o.diag && off == o.off;
  }
  auto operator<=>(const PMat& o) const = default;

  static PMat unit(int n, long long i, long long j, long long a = 1);
  static PMat diagonal(const PVec& d);

  std::string str() const;
};

// total order used for deterministic term listings: sigma_off first, then
// the structural comparison
struct TermOrder {
  bool operator()(const PMat& a, const PMat& b) const {
    auto sa = a.sigma_off(), sb = b.sigma_off();
    if (sa != sb) return sa < sb;
    return a < b;
  }
};

// all compositions of m into n parts >= 0 (the weight set of degree m)
std::vector<PVec> compositions(int n, long long m);

// all matrices with nonnegative entries summing to r (over one period) whose
// off-diagonal support lies in the band |j - i| <= window
std::vector<PMat> enumerate_band(int n, long long r, long long window);

}  // namespace afs
