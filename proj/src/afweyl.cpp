#include "afweyl.hpp"

#include <algorithm>
#include <unordered_set>

namespace afs {

APerm APerm::identity(int r) {
  std::vector<long long> w(r);
  for (int i = 0; i < r; ++i) w[i] = i + 1;
  return APerm(r, std::move(w));
}

bool APerm::valid() const {
  if (r < 1 || int(w.size()) != r) return false;
  std::vector<char> seen(r, 0);
  for (long long x : w) {
    long long t = mod_ll(x - 1, r);
    if (seen[t]) return false;
    seen[t] = 1;
  }
  return true;
}

APerm APerm::compose(const APerm& o) const {
  if (r != o.r) throw contract_error("compose: period mismatch");
  std::vector<long long> nw(r);
  for (int i = 0; i < r; ++i) nw[i] = at(o.w[i]);
  return APerm(r, std::move(nw));
}

APerm APerm::inverse() const {
  std::vector<long long> nw(r);
  for (int p = 1; p <= r; ++p) {
    long long v = w[p - 1];
    long long v0 = mod_ll(v - 1, r) + 1;
    nw[v0 - 1] = p - (v - v0);  // w(p)=v => w^{-1}(v0) = p - (v - v0)
  }
  return APerm(r, std::move(nw));
}

Blocks::Blocks(const PVec& lam_) : lam(lam_) {
  int n = lam.n;
  pref.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (lam.v[i - 1] < 0) throw contract_error("Blocks: negative part");
    pref[i] = pref[i - 1] + lam.v[i - 1];
  }
  r = pref[n];
  block_of_window.assign(r, 0);
  for (int i = 1; i <= n; ++i)
    for (long long p = pref[i - 1]; p < pref[i]; ++p) block_of_window[p] = i;
}

std::vector<APerm> young_generators(const PVec& lam) {
  Blocks b(lam);
  std::vector<APerm> gens;
  for (int i = 1; i <= lam.n; ++i)
    for (long long q = b.pref[i - 1] + 1; q < b.pref[i]; ++q) {
      APerm s = APerm::identity(int(b.r));
      std::swap(s.w[q - 1], s.w[q]);
      gens.push_back(std::move(s));
    }
  return gens;
}

std::vector<APerm> young_elements(const PVec& lam) {
  Blocks b(lam);
  int r = int(b.r);
  std::vector<APerm> out{APerm::identity(r)};
  for (int i = 1; i <= lam.n; ++i) {
    long long lo = b.pref[i - 1], hi = b.pref[i];
    if (hi - lo < 2) continue;
    std::vector<long long> seg;
    for (long long v = lo + 1; v <= hi; ++v) seg.push_back(v);
    std::vector<std::vector<long long>> arrs;
    do arrs.push_back(seg);
    while (std::next_permutation(seg.begin(), seg.end()));
    std::vector<APerm> next;
    next.reserve(out.size() * arrs.size());
    for (const APerm& w : out)
      for (const auto& arr : arrs) {
        APerm nw = w;
        for (long long t = 0; t < hi - lo; ++t) nw.w[lo + t] = arr[t];
        next.push_back(std::move(nw));
      }
    out = std::move(next);
  }
  return out;
}

bool is_minimal_rep(const APerm& d, const PVec& lam) {
  Blocks b(lam);
  if (b.r != d.r) throw contract_error("is_minimal_rep: size mismatch");
  for (int i = 1; i <= lam.n; ++i)
    for (long long p = b.pref[i - 1] + 1; p < b.pref[i]; ++p)
      if (d.at(p) >= d.at(p + 1)) return false;
  return true;
}

static PMat blockmat_b(const Blocks& lb, const APerm& w, const Blocks& mb) {
  if (lb.r != w.r || mb.r != w.r || lb.lam.n != mb.lam.n)
    throw contract_error("blockmat: size mismatch");
  APerm winv = w.inverse();
  PMat A(lb.lam.n);
  for (long long q = 1; q <= w.r; ++q)
    A.add(lb.block_of(q), mb.block_of(winv.at(q)), 1);
  return A;
}

PMat blockmat(const PVec& lam, const APerm& w, const PVec& mu) {
  return blockmat_b(Blocks(lam), w, Blocks(mu));
}

PMat jmath(const PVec& lam, const APerm& d, const PVec& mu) {
  if (!d.valid()) throw contract_error("jmath: invalid permutation");
  if (!is_minimal_rep(d.inverse(), lam) || !is_minimal_rep(d, mu))
    throw contract_error("jmath: not a minimal double coset representative");
  return blockmat(lam, d, mu);
}

std::tuple<PVec, APerm, PVec> jmath_inverse(const PMat& A) {
  int n = A.n;
  if (n < 1) throw contract_error("jmath_inverse: empty matrix");
  if (!A.nonneg_off() || !A.diag.nonneg())
    throw contract_error("jmath_inverse: negative entry");
  long long r = A.sigma();
  if (r < 1) throw contract_error("jmath_inverse: zero matrix");
  PVec lam = A.ro(), mu = A.co();
  Blocks lb(lam), mb(mu);

  // row-major list of entries (diagonal folded in), columns ascending
  struct Ent {
    long long k;     // actual row index for the window column
    long long base;  // value base: m*r + pref_lam[i-1] + row prefix sum
    long long a;
  };
  std::vector<std::vector<Ent>> col(n + 1);
  for (int i = 1; i <= n; ++i) {
    std::vector<std::pair<long long, long long>> row;  // (j, a)
    for (const auto& e : A.off)
      if (e.i == i) row.push_back({e.j, e.a});
    if (A.diag.v[i - 1] > 0) row.push_back({i, A.diag.v[i - 1]});
    std::sort(row.begin(), row.end());
    long long off = 0;
    for (auto [j, a] : row) {
      int l0 = lam.res(j);
      long long s = (j - l0) / n;
      col[l0].push_back({i - s * n, -s * r + lb.pref[i - 1] + off, a});
      off += a;
    }
  }
  std::vector<long long> w(r);
  for (int l0 = 1; l0 <= n; ++l0) {
    std::sort(col[l0].begin(), col[l0].end(),
              [](const Ent& x, const Ent& y) { return x.k < y.k; });
    long long pos = mb.pref[l0 - 1] + 1;
    for (const Ent& e : col[l0])
      for (long long u = 0; u < e.a; ++u) w[pos++ - 1] = e.base + u + 1;
  }
  APerm d(int(r), std::move(w));
  return {lam, d, mu};
}

APerm canonical_left(const APerm& w, const Blocks& lam) {
  if (lam.r != w.r) throw contract_error("canonical_left: size mismatch");
  int n = lam.lam.n, r = w.r;
  // per block: window positions whose value residue lands in the block
  std::vector<std::vector<int>> pos(n + 1);
  std::vector<long long> shift(r);
  for (int p = 1; p <= r; ++p) {
    long long v = w.w[p - 1];
    long long v0 = mod_ll(v - 1, r) + 1;
    shift[p - 1] = v - v0;
    pos[lam.block_of_window[v0 - 1]].push_back(p);
  }
  APerm c(r, std::vector<long long>(r));
  for (int k = 1; k <= n; ++k)
    for (size_t t = 0; t < pos[k].size(); ++t) {
      int p = pos[k][t];
      c.w[p - 1] = lam.pref[k - 1] + 1 + (long long)t + shift[p - 1];
    }
  return c;
}

APerm canonical_right(const APerm& w, const Blocks& mu) {
  if (mu.r != w.r) throw contract_error("canonical_right: size mismatch");
  APerm c = w;
  for (int i = 1; i <= mu.lam.n; ++i)
    std::sort(c.w.begin() + mu.pref[i - 1], c.w.begin() + mu.pref[i]);
  return c;
}

std::vector<APerm> left_transversal(const PVec& lam, const APerm& d,
                                    const PVec& mu) {
  Blocks lb(lam);
  std::unordered_set<APerm, APermHash> seen;
  for (const APerm& u : young_elements(mu)) seen.insert(canonical_left(d.compose(u), lb));
  std::vector<APerm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<APerm> double_coset(const PVec& lam, const APerm& d, const PVec& mu) {
  std::unordered_set<APerm, APermHash> seen;
  for (const APerm& s : young_elements(lam)) {
    APerm sd = s.compose(d);
    for (const APerm& u : young_elements(mu)) seen.insert(sd.compose(u));
  }
  std::vector<APerm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

APerm generator_rep(const PVec& lam, int h, long long j, long long k) {
  int n = lam.n;
  if (h < 1 || h > n) throw contract_error("generator_rep: bad row");
  if (k < 1) throw contract_error("generator_rep: order must be >= 1");
  int a = lam.res(j);
  long long m = (j - a) / n;
  if (j == h) throw contract_error("generator_rep: diagonal generator");
  if (lam.at(j) < k) throw contract_error("generator_rep: block too small");
  Blocks b(lam);
  const auto& L = b.pref;  // L[i] = lam_1 + .. + lam_i
  long long r = b.r;
  APerm u = APerm::identity(int(r));
  auto seg = [&](long long lo, long long hi, long long img_lo) {
    for (long long p = lo; p <= hi; ++p) u.w[p - 1] = img_lo + (p - lo);
  };
  if (h < a && m >= 0) {
    seg(L[h] + 1, L[a - 1], L[h] + 1 + k);
    seg(L[a - 1] + 1, L[a - 1] + k, L[h] - m * r + 1);
  } else if (h <= a && m < 0) {
    seg(L[h - 1] + 1, L[a] - k, L[h - 1] + 1 + k);
    seg(L[a] - k + 1, L[a], L[h - 1] - m * r + 1);
  } else if (h >= a && m > 0) {
    seg(L[a - 1] + 1, L[a - 1] + k, L[h] - m * r - k + 1);
    seg(L[a - 1] + k + 1, L[h], L[a - 1] + 1);
  } else {  // h > a, m <= 0
    seg(L[a] - k + 1, L[a], L[h - 1] - m * r - k + 1);
    seg(L[a] + 1, L[h - 1], L[a] + 1 - k);
  }
  if (!u.valid()) throw internal_error("generator_rep: invalid window");
  return u;
}

Int young_size(const PVec& lam) {
  Int s = 1;
  for (long long x : lam.v) s *= factorial(x);
  return s;
}

// shared convolution core: counts of canonical left-coset representatives of
// {t x : t in T, x in X}, grouped by block matrix with uniformity check
static MatLC convolve(const std::vector<APerm>& T, const std::vector<APerm>& X,
                      const Blocks& lb, const Blocks& mb) {
  std::unordered_map<APerm, long long, APermHash> counts;
  for (const APerm& t : T)
    for (const APerm& x : X) counts[canonical_left(t.compose(x), lb)]++;
  MatLC out;
  for (const auto& [zc, c] : counts) {
    PMat C = blockmat_b(lb, zc, mb);
    auto it = out.find(C);
    if (it == out.end())
      out.emplace(C, Rat(c));
    else if (it->second != c)
      throw internal_error("oracle: multiplicity not constant on a double coset");
  }
  return out;
}

MatLC oracle_mul(const PMat& B, const PMat& A) {
  if (B.n != A.n) throw contract_error("oracle_mul: rank mismatch");
  auto [lamp, dp, lamb] = jmath_inverse(B);
  auto [lama, d, mu] = jmath_inverse(A);
  if (lamb != lama) return {};
  Blocks lb(lamp), mb(mu);
  return convolve(left_transversal(lamp, dp, lama),
                  left_transversal(lama, d, mu), lb, mb);
}

MatLC oracle_mul_naive(const PMat& B, const PMat& A) {
  if (B.n != A.n) throw contract_error("oracle_mul_naive: rank mismatch");
  auto [lamp, dp, lamb] = jmath_inverse(B);
  auto [lama, d, mu] = jmath_inverse(A);
  if (lamb != lama) return {};
  Blocks lb(lamp), mb(mu);
  std::unordered_map<APerm, long long, APermHash> counts;
  for (const APerm& g : double_coset(lamp, dp, lamb))
    for (const APerm& x : left_transversal(lama, d, mu)) counts[g.compose(x)]++;
  // every element of a support double coset must appear, all with one count
  std::map<PMat, std::pair<long long, long long>> per;  // C -> (count, #elems)
  for (const auto& [z, c] : counts) {
    PMat C = blockmat_b(lb, z, mb);
    auto it = per.find(C);
    if (it == per.end())
      per.emplace(C, std::make_pair(c, 1));
    else {
      if (it->second.first != c)
        throw internal_error("naive oracle: nonuniform count on a double coset");
      it->second.second++;
    }
  }
  MatLC out;
  for (const auto& [C, pr] : per) {
    Int denom = 1;
    for (long long x : C.diag.v) denom *= factorial(x);
    for (const auto& e : C.off) denom *= factorial(e.a);
    Int expect = young_size(lamp) * young_size(mu) / denom;
    if (Int(pr.second) != expect)
      throw internal_error("naive oracle: double coset not fully covered");
    out.emplace(C, Rat(pr.first));
  }
  return out;
}

MatLC OracleCache::gen_mul(const PVec& lam, int h, long long j, long long k,
                           const std::vector<APerm>& xs,
                           const Blocks& lamp_blocks, const Blocks& mu_blocks) {
  std::string key = lam.str() + "|" + std::to_string(h) + "," +
                    std::to_string(j) + "," + std::to_string(k);
  auto it = left.find(key);
  if (it == left.end()) {
    APerm u = generator_rep(lam, h, j, k);
    PVec lamp = lam;
    lamp.at_res(h) += k;
    lamp.at_res(j) -= k;
    it = left.emplace(key, left_transversal(lamp, u, lam)).first;
  }
  return convolve(it->second, xs, lamp_blocks, mu_blocks);
}

}  // namespace afs
