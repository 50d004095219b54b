#include "schur.hpp"

#include <algorithm>
#include <set>

namespace afs {

bool in_theta(const PMat& A, int n, long long r) {
  return A.n == n && A.nonneg_off() && A.diag.nonneg() && A.sigma() == r;
}

bool in_theta_tilde(const PMat& A, int n) { return A.n == n && A.nonneg_off(); }

// enumerate all finitely supported delta >= 0 on `pos` with total k
template <class F>
static void each_delta(const std::vector<long long>& pos, long long k, F&& fn) {
  std::vector<long long> cur(pos.size(), 0);
  auto rec = [&](auto&& self, size_t at, long long rem) -> void {
    if (at + 1 == pos.size()) {
      cur[at] = rem;
      fn(cur);
      return;
    }
    for (long long x = 0; x <= rem; ++x) {
      cur[at] = x;
      self(self, at + 1, rem - x);
    }
  };
  if (!pos.empty()) rec(rec, 0, k);
}

MatLC gen_mul(long long k, long long i_in, long long j_in, const PMat& A,
              GenMode mode, const Ring& ring) {
  int n = A.n;
  if (n < 1) throw contract_error("gen_mul: empty context");
  if (k < 1) throw contract_error("gen_mul: order must be >= 1");
  if (i_in == j_in) throw contract_error("gen_mul: diagonal generator");
  if (!A.nonneg_off()) throw contract_error("gen_mul: negative off entry");
  // normalize the row into 1..n, shifting the column with it
  int i = A.diag.res(i_in);
  long long j = j_in - (i_in - i);
  bool same = (A.diag.res(j) == i);
  long long step = j - i;  // multiple of n exactly when same residue
  if (mode == GenMode::NonNegative) {
    if (!A.diag.nonneg()) throw contract_error("gen_mul: negative diagonal");
    if (A.ro().at(j) < k) throw contract_error("gen_mul: margin too small");
  }

  // candidate support: columns where row j is nonzero (in AnyDiagonal mode
  // also the unconstrained diagonal column j); for a same-residue generator
  // the support extends along +step chains of length <= k
  std::set<long long> seeds;
  int jr = A.diag.res(j);
  long long sj = j - jr;
  for (const auto& e : A.off)
    if (e.i == jr) seeds.insert(e.j + sj);
  if (A.diag.v[jr - 1] != 0) seeds.insert(jr + sj);
  if (mode == GenMode::AnyDiagonal) seeds.insert(j);
  std::set<long long> support;
  for (long long s : seeds)
    for (long long u = 0; u <= (same ? k : 0); ++u) support.insert(s + u * step);
  std::vector<long long> pos(support.begin(), support.end());

  MatLC out;
  each_delta(pos, k, [&](const std::vector<long long>& dt) {
    PMat M = A;
    for (size_t t = 0; t < pos.size(); ++t)
      if (dt[t]) {
        M.add(i, pos[t], dt[t]);
        M.add(j, pos[t], -dt[t]);
      }
    bool ok = M.nonneg_off() &&
              (mode == GenMode::AnyDiagonal || M.diag.nonneg());
    if (!ok) return;
    Int c = 1;
    for (size_t t = 0; t < pos.size(); ++t)
      if (dt[t]) c *= gbinom(Int(M.entry(i, pos[t])), dt[t]);
    add_term(out, M, Rat(c), ring);
  });
  return out;
}

MatLC Engine::chain_apply(const PMat& B, const MatLC& y) {
  // start with [diag(co(B))] . y, then apply the factors right to left
  PVec nu = B.co();
  MatLC cur;
  for (const auto& [C, c] : y)
    if (C.ro() == nu) cur.emplace(C, c);
  for (auto it = B.off.rbegin(); it != B.off.rend(); ++it) {
    MatLC next;
    for (const auto& [C, c] : cur)
      add_scaled(next, gen_mul(it->a, it->i, it->j, C, mode, ring), c, ring);
    cur = std::move(next);
  }
  return cur;
}

const MatLC& Engine::corrections(const PMat& B) {
  auto hit = corr.find(B);
  if (hit != corr.end()) return hit->second;
  MatLC unit{{PMat::diagonal(B.co()), Rat(1)}};
  MatLC ch = chain_apply(B, unit);
  auto lead = ch.find(B);
  if (lead == ch.end() || lead->second != 1)
    throw internal_error("chain: leading coefficient is not 1");
  ch.erase(lead);
  for (const auto& [D, c] : ch)
    if (D.sigma_off() >= B.sigma_off())
      throw internal_error("chain: correction term not strictly lower");
  return corr.emplace(B, std::move(ch)).first->second;
}

MatLC Engine::mul_basis(const PMat& B, const MatLC& y) {
  if (B.off.empty()) {  // diagonal acts by filtering on row margins
    MatLC out;
    for (const auto& [C, c] : y)
      if (C.ro() == B.diag) out.emplace(C, c);
    return out;
  }
  MatLC out = chain_apply(B, y);
  for (const auto& [D, c] : corrections(B))
    add_scaled(out, mul_basis(D, y), -c, ring);
  return out;
}

MatLC Engine::mul(const MatLC& x, const MatLC& y) {
  MatLC out;
  for (const auto& [B, c] : x) add_scaled(out, mul_basis(B, y), c, ring);
  return out;
}

MatLC mul_by_oracle(const MatLC& x, const MatLC& y, const Ring& ring) {
  MatLC out;
  for (const auto& [B, cb] : x)
    for (const auto& [A, ca] : y)
      for (const auto& [C, m] : oracle_mul(B, A))
        add_term(out, C, cb * ca * m, ring);
  return out;
}

static Int int_pow(const Int& b, long long e) {
  Int r = 1;
  for (long long t = 0; t < e; ++t) r *= b;
  return r;
}

// shared shape of the three element families: a coefficient per diagonal
template <class Coeff>
static MatLC diag_sum(const PMat& A, long long r, const Ring& ring, Coeff&& cf) {
  if (!A.zero_diag()) throw contract_error("element family: nonzero diagonal");
  MatLC out;
  long long rest = r - A.sigma();
  if (rest < 0) return out;
  for (const PVec& mu : compositions(A.n, rest)) {
    Rat c = cf(mu);
    if (c == 0) continue;
    add_term(out, A + PMat::diagonal(mu), c, ring);
  }
  return out;
}

MatLC elem_bracket(const PMat& A, const PVec& jexp, long long r, const Ring& ring) {
  if (!A.nonneg_off()) throw contract_error("bracket: negative off entry");
  if (!jexp.nonneg() || jexp.n != A.n)
    throw contract_error("bracket: bad exponent vector");
  return diag_sum(A, r, ring, [&](const PVec& mu) {
    Int c = 1;
    for (int t = 0; t < A.n; ++t) c *= int_pow(Int(mu.v[t]), jexp.v[t]);
    return Rat(c);
  });
}

MatLC elem_brace(const PMat& A, const PVec& lam, long long r, const Ring& ring) {
  if (!lam.nonneg() || lam.n != A.n)
    throw contract_error("brace: bad binomial vector");
  if (!A.nonneg_off()) return {};  // convention: vanishes off the cone
  return diag_sum(A, r, ring,
                  [&](const PVec& mu) { return Rat(vec_binom(mu, lam)); });
}

MatLC elem_double_bracket(const PMat& A, const PVec& lam_res, long long r,
                          long long q, const Ring& ring) {
  if (q < 1) throw contract_error("residue sum: bad modulus");
  if (lam_res.n != A.n) throw contract_error("residue sum: bad residue vector");
  if (!A.nonneg_off()) throw contract_error("residue sum: negative off entry");
  PVec want = lam_res.bar(q);
  return diag_sum(A, r, ring, [&](const PVec& mu) {
    return Rat(mu.bar(q) == want ? 1 : 0);
  });
}

}  // namespace afs
