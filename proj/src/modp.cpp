#include "modp.hpp"

#include <algorithm>
#include <set>

namespace afs {

ModPContext::ModPContext(long long p_, int h_) : p(p_), h(h_) {
  if (p < 2) throw contract_error("modp: p must be a prime >= 2");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw contract_error("modp: p must be prime");
  if (h < 1) throw contract_error("modp: level must be >= 1");
  q = 1;
  for (int t = 0; t < h; ++t) {
    if (q > (1LL << 40) / p) throw contract_error("modp: p^h too large");
    q *= p;
  }
}

HypLC reduce(const HypLC& x, long long p) {
  Ring fp = Ring::Fp(p);
  HypLC out;
  for (const auto& [k, c] : x) add_term(out, k, c, fp);
  return out;
}

MatLC reduce(const MatLC& x, long long p) {
  Ring fp = Ring::Fp(p);
  MatLC out;
  for (const auto& [k, c] : x) add_term(out, k, c, fp);
  return out;
}

bool membership_h(const HypLC& x, const ModPContext& ctx) {
  for (const auto& [k, c] : x) {
    for (const auto& e : k.A.off)
      if (e.a >= ctx.q) return false;
    for (long long v : k.lam.v)
      if (v < 0 || v >= ctx.q) return false;
  }
  return true;
}

// column slots per row for the level-h enumeration: j in (i-W, i+W] \ {i}
static std::vector<std::pair<long long, long long>> level_slots(int n, long long W) {
  std::vector<std::pair<long long, long long>> slots;
  for (long long i = 1; i <= n; ++i)
    for (long long j = i - W + 1; j <= i + W; ++j)
      if (j != i) slots.emplace_back(i, j);
  return slots;
}

// run fn over every assignment of values[0..len) each in [0, q)
template <class F>
static void odometer(size_t len, long long q, F&& fn) {
  std::vector<long long> vals(len, 0);
  for (;;) {
    fn(vals);
    size_t at = 0;
    while (at < len && ++vals[at] == q) vals[at++] = 0;
    if (at == len) return;
  }
}

std::vector<std::pair<HKey, HypLC>> enumerate_basis(ModBasis kind, int n,
                                                    const ModPContext& ctx,
                                                    long long W,
                                                    HyperEngine& eng) {
  std::vector<std::pair<HKey, HypLC>> out;
  auto lams = [&](const PMat& A) {
    odometer(size_t(n), ctx.q, [&](const std::vector<long long>& lv) {
      PVec lam(n, lv);
      HKey key{A, lam};
      switch (kind) {
        case ModBasis::Bh:
        case ModBasis::Mh0: out.emplace_back(key, h_elem(A, lam)); break;
        case ModBasis::Mh:
          out.emplace_back(key, reduce(eng.expand(HBasis::M, key), ctx.p));
          break;
        case ModBasis::Ch:
          out.emplace_back(key, reduce(eng.expand(HBasis::C, key), ctx.p));
          break;
        case ModBasis::Gh:
          out.emplace_back(key, reduce(eng.expand(HBasis::G, key), ctx.p));
          break;
      }
    });
  };
  if (kind == ModBasis::Mh0) {
    lams(PMat(n));
    return out;
  }
  auto slots = level_slots(n, W);
  odometer(slots.size(), ctx.q, [&](const std::vector<long long>& vals) {
    PMat A(n);
    for (size_t s = 0; s < slots.size(); ++s)
      if (vals[s]) A.add(slots[s].first, slots[s].second, vals[s]);
    lams(A);
  });
  return out;
}

MatLC xi_rk(const HypLC& x, long long r, long long p) {
  Ring fp = Ring::Fp(p);
  MatLC out;
  for (const auto& [k, c] : x)
    add_scaled(out, elem_brace(k.A, k.lam, r, fp), c, fp);
  return out;
}

// left-multiply x by the generator-sum factors of `part` in lexicographic
// order (rightmost factor first); terms without the required row margin
// have no compatible left factor and contribute nothing
static MatLC chain_factors(const PMat& part, MatLC x, const Ring& ring) {
  for (auto it = part.off.rbegin(); it != part.off.rend(); ++it) {
    MatLC next;
    for (const auto& [B, c] : x) {
      if (B.ro().at(it->j) < it->a) continue;
      add_scaled(next, gen_mul(it->a, it->i, it->j, B, GenMode::NonNegative, ring),
                 c, ring);
    }
    x = std::move(next);
  }
  return x;
}

static MatLC schur_unit(int n, long long r, const Ring& ring) {
  MatLC out;
  for (const auto& mu : compositions(n, r))
    add_term(out, PMat::diagonal(mu), Rat(1), ring);
  return out;
}

// all windowed level-h off-diagonal matrices with sigma <= r, |j-i| <= W
static std::vector<PMat> little_mats(int n, long long r, const ModPContext& ctx,
                                     long long W) {
  std::vector<std::pair<long long, long long>> slots;
  for (long long i = 1; i <= n; ++i)
    for (long long j = i - W; j <= i + W; ++j)
      if (j != i) slots.emplace_back(i, j);
  std::vector<PMat> out;
  long long cap = std::min(ctx.q - 1, r);
  odometer(slots.size(), cap + 1, [&](const std::vector<long long>& vals) {
    long long s = 0;
    for (long long v : vals) s += v;
    if (s > r) return;
    PMat A(n);
    for (size_t t = 0; t < slots.size(); ++t)
      if (vals[t]) A.add(slots[t].first, slots[t].second, vals[t]);
    out.push_back(A);
  });
  return out;
}

std::vector<std::pair<HKey, MatLC>> little_inf_basis(LittleBasis kind, int n,
                                                     long long r,
                                                     const ModPContext& ctx,
                                                     long long W) {
  Ring fp = Ring::Fp(ctx.p);
  std::vector<std::pair<HKey, MatLC>> out;
  for (const auto& A : little_mats(n, r, ctx, W)) {
    long long rest = r - A.sigma_off();
    std::set<PVec> classes;
    for (const auto& mu : compositions(n, rest)) classes.insert(mu.bar(ctx.q));
    switch (kind) {
      case LittleBasis::Phr:
        for (const auto& lbar : classes)
          out.emplace_back(HKey{A, lbar},
                           elem_double_bracket(A, lbar, r, ctx.q, fp));
        break;
      case LittleBasis::Bhr:
        odometer(size_t(n), ctx.q, [&](const std::vector<long long>& lv) {
          PVec lam(n, lv);
          if (!classes.count(lam.bar(ctx.q))) return;
          out.emplace_back(HKey{A, lam}, elem_brace(A, lam, r, fp));
        });
        break;
      case LittleBasis::PPhr:
        for (const auto& mu : compositions(n, rest)) {
          PMat M = A;
          M.diag = M.diag + mu;
          out.emplace_back(HKey{A, mu}, MatLC{{M, Rat(1)}});
        }
        break;
      case LittleBasis::Mhr:
      case LittleBasis::MPhr: {
        MatLC feln = chain_factors(A.lower(), schur_unit(n, r, fp), fp);
        PVec sg = A.sigma_vec();
        std::set<PVec> seen;
        for (const auto& lam : compositions(n, r)) {
          if (!leq_weights(sg, lam)) continue;
          bool classes_kind = (kind == LittleBasis::Mhr);
          PVec idx = classes_kind ? lam.bar(ctx.q) : lam;
          if (classes_kind && !seen.insert(idx).second) continue;
          MatLC mid;
          for (const auto& [B, c] : feln) {
            PVec rob = B.ro();
            if (classes_kind ? (rob.bar(ctx.q) == idx) : (rob == lam))
              mid.emplace(B, c);
          }
          out.emplace_back(HKey{A, idx}, chain_factors(A.upper(), mid, fp));
        }
        break;
      }
    }
  }
  return out;
}

HypLC class_coords(const MatLC& x, int n, long long r, const ModPContext& ctx) {
  Ring fp = Ring::Fp(ctx.p);
  std::map<HKey, std::pair<Rat, long long>, HOrder> acc;
  for (const auto& [M, c] : x) {
    if (!M.diag.nonneg()) throw contract_error("class_coords: negative diagonal");
    HKey key{M.offdiag_part(), M.diag.bar(ctx.q)};
    Rat cn = fp.normalize(c);
    auto [it, fresh] = acc.emplace(key, std::make_pair(cn, 1));
    if (!fresh) {
      if (it->second.first != cn)
        throw internal_error("element is not constant on residue classes");
      ++it->second.second;
    }
  }
  HypLC out;
  for (const auto& [key, cc] : acc) {
    long long expect = 0;
    for (const auto& mu : compositions(n, r - key.A.sigma_off()))
      if (mu.bar(ctx.q) == key.lam) ++expect;
    if (cc.second != expect)
      throw internal_error("element is not constant on residue classes");
    add_term(out, key, cc.first, fp);
  }
  return out;
}

// rank over F_p by destructive row elimination
static long long fp_rank(std::vector<std::vector<long long>>& rows, long long p) {
  size_t nc = rows.empty() ? 0 : rows[0].size();
  long long rank = 0;
  for (size_t c = 0; c < nc; ++c) {
    size_t piv = size_t(rank);
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[size_t(rank)], rows[piv]);
    long long inv = 1, base = mod_ll(rows[size_t(rank)][c], p), e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == size_t(rank)) continue;
      long long f = mod_ll(rows[rr][c], p) * inv % p;
      if (!f) continue;
      for (size_t cc = c; cc < nc; ++cc)
        rows[rr][cc] = mod_ll(rows[rr][cc] - f * rows[size_t(rank)][cc], p);
    }
    ++rank;
  }
  return rank;
}

bool independence_check(const std::vector<HKey>& family, int n,
                        const ModPContext& ctx) {
  if (family.empty()) return true;
  for (const auto& k : family)
    if (k.A.n != n || k.lam.n != n)
      throw contract_error("independence_check: rank mismatch in family");
  std::set<HKey, HOrder> distinct(family.begin(), family.end());
  if (distinct.size() != family.size())
    throw contract_error("independence_check: repeated index pair");

  Ring fp = Ring::Fp(ctx.p);
  long long rmax = 0;
  for (const auto& k : family)
    rmax = std::max(rmax, k.A.sigma_off() + k.lam.sum());

  struct RowKey {
    long long r;
    PMat M;
    bool operator<(const RowKey& o) const {
      if (r != o.r) return r < o.r;
      return TermOrder{}(M, o.M);
    }
  };
  std::map<RowKey, std::vector<long long>> rows;
  for (size_t idx = 0; idx < family.size(); ++idx)
    for (long long r = 0; r <= rmax; ++r)
      for (const auto& [M, c] : elem_brace(family[idx].A, family[idx].lam, r, fp)) {
        auto& row = rows[RowKey{r, M}];
        row.resize(family.size(), 0);
        row[idx] = c.convert_to<long long>();
      }
  std::vector<std::vector<long long>> mat;
  mat.reserve(rows.size());
  for (auto& [k, row] : rows) {
    row.resize(family.size(), 0);
    mat.push_back(std::move(row));
  }
  return fp_rank(mat, ctx.p) == (long long)family.size();
}

}  // namespace afs
