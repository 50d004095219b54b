#include "hyper.hpp"

#include <algorithm>
#include <set>

namespace afs {

bool in_theta_pm(const PMat& A, int n) {
  return A.n == n && A.zero_diag() && A.nonneg_off();
}

HypLC h_elem(const PMat& A, const PVec& lam) {
  if (!in_theta_pm(A, A.n))
    throw contract_error("element index must have zero diagonal and nonnegative off entries");
  if (lam.n != A.n || !lam.nonneg())
    throw contract_error("weight vector must be nonnegative with matching length");
  return HypLC{{HKey{A, lam}, Rat(1)}};
}

HypLC h_unit(int n) { return h_elem(PMat(n), PVec(n)); }

std::string hkey_str(const HKey& k) {
  std::string s = k.A.str();
  s += "<";
  for (int t = 0; t < k.lam.n; ++t) {
    if (t) s += ",";
    s += std::to_string(k.lam.v[t]);
  }
  s += ">";
  return s;
}

HypLC h_transpose(const HypLC& x, const Ring& ring) {
  HypLC out;
  for (const auto& [key, c] : x)
    add_term(out, HKey{key.A.transpose(), key.lam}, c, ring);
  return out;
}

// enumerate all finitely supported alpha >= 0 on `pos` with total k
template <class F>
static void each_alpha(const std::vector<long long>& pos, long long k, F&& fn) {
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

// enumerate all 0 <= dt <= bound componentwise
template <class F>
static void each_below(const PVec& bound, F&& fn) {
  PVec cur(bound.n);
  auto rec = [&](auto&& self, int at) -> void {
    if (at == bound.n) {
      fn(cur);
      return;
    }
    for (long long x = 0; x <= bound.v[at]; ++x) {
      cur.v[at] = x;
      self(self, at + 1);
    }
  };
  rec(rec, 0);
}

HypLC h_gen_mul(long long k, long long i_in, long long j_in, const PMat& A,
                const PVec& lam, const Ring& ring) {
  int n = A.n;
  if (n < 1) throw contract_error("gen_mul: empty context");
  if (k < 1) throw contract_error("gen_mul: order must be >= 1");
  if (i_in == j_in) throw contract_error("gen_mul: diagonal generator");
  if (!in_theta_pm(A, n))
    throw contract_error("gen_mul: index must have zero diagonal and nonnegative off entries");
  if (lam.n != n || !lam.nonneg())
    throw contract_error("gen_mul: weight vector must be nonnegative");
  // normalize the row into 1..n, shifting the column with it
  int i = A.diag.res(i_in);
  long long j = j_in - (i_in - i);
  int jr = A.diag.res(j);
  bool same = (jr == i);
  long long step = j - i;

  // candidate support: columns where row j is nonzero, plus j itself; for a
  // same-residue generator the support extends along +step chains
  std::set<long long> seeds;
  long long sj = j - jr;
  for (const auto& e : A.off)
    if (e.i == jr) seeds.insert(e.j + sj);
  seeds.insert(j);
  std::set<long long> support;
  for (long long s : seeds)
    for (long long u = 0; u <= (same ? k : 0); ++u) support.insert(s + u * step);
  std::vector<long long> pos(support.begin(), support.end());

  HypLC out;
  each_alpha(pos, k, [&](const std::vector<long long>& al) {
    PMat M = A;
    long long ai = 0;
    for (size_t t = 0; t < pos.size(); ++t)
      if (al[t]) {
        if (pos[t] == i)
          ai = al[t];
        else
          M.add(i, pos[t], al[t]);
        if (pos[t] != j) M.add(j, pos[t], -al[t]);
      }
    if (!M.nonneg_off()) return;
    Int base = 1;
    for (size_t t = 0; t < pos.size(); ++t)
      if (al[t] && pos[t] != i)
        base *= gbinom(Int(M.entry(i, pos[t])), al[t]);
    if (base == 0) return;
    long long aj = 0;
    for (size_t t = 0; t < pos.size(); ++t)
      if (pos[t] == j) aj = al[t];
    // weight-vector part: top difference between the gained and lost rows
    PVec top = PVec::eps(n, j) * aj - PVec::eps(n, i) * ai;
    each_below(lam, [&](const PVec& dt) {
      long long bmax = std::min(ai, lam.at(i) - dt.at(i));
      Int bsum = 0;
      for (long long b = 0; b <= bmax; ++b)
        bsum += vec_binom(top, lam - dt - PVec::eps(n, i) * b) * gbinom(ai, b);
      Int c = gbinom(Int(dt.at(i) + ai), ai) * base * bsum;
      if (c == 0) return;
      add_term(out, HKey{M, dt + PVec::eps(n, i) * ai}, Rat(c), ring);
    });
  });
  return out;
}

HypLC hmul(const PVec& mu, const HypLC& x, const Ring& ring) {
  if (!mu.nonneg()) throw contract_error("hmul: weight vector must be nonnegative");
  HypLC out;
  for (const auto& [key, c] : x) {
    if (key.A.n != mu.n) throw contract_error("hmul: context mismatch");
    const PVec ro = key.A.ro();
    const PVec& lam = key.lam;
    each_below(mu, [&](const PVec& dt) {
      PVec rem = mu - dt;
      PVec bbound = rem;
      for (int t = 0; t < mu.n; ++t) bbound.v[t] = std::min(bbound.v[t], lam.v[t]);
      Int inner = 0;
      each_below(bbound, [&](const PVec& bt) {
        inner += vec_binom(ro, rem - bt) * vec_binom(lam, bt);
      });
      Int coeff = vec_binom(dt + lam, lam) * inner;
      if (coeff == 0) return;
      add_term(out, HKey{key.A, lam + dt}, c * Rat(coeff), ring);
    });
  }
  return out;
}

const char* hbasis_code(HBasis b) {
  switch (b) {
    case HBasis::B: return "B";
    case HBasis::M: return "M";
    case HBasis::Bp: return "Bp";
    case HBasis::C: return "C";
    case HBasis::G: return "G";
  }
  throw internal_error("unknown basis tag");
}

HBasis hbasis_from_code(const std::string& s) {
  if (s == "B") return HBasis::B;
  if (s == "M") return HBasis::M;
  if (s == "Bp") return HBasis::Bp;
  if (s == "C") return HBasis::C;
  if (s == "G") return HBasis::G;
  throw contract_error("unknown basis code: " + s);
}

std::vector<std::vector<long long>> partitions_of(long long k) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long rem, long long maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (long long p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

HypLC ray_partition_sum(int n, long long k, long long i, long long l) {
  if (l == 0) throw contract_error("ray step must be nonzero");
  if (k < 0) throw contract_error("degree must be nonnegative");
  HypLC out;
  for (const auto& parts : partitions_of(k)) {
    PMat A(n);
    for (long long p : parts) A.add(i, i + p * l * n, 1);
    out.emplace(HKey{A, PVec(n)}, Rat(1));
  }
  return out;
}

HypLC hall_gen_mul(long long k, long long i, long long j, const PMat& A,
                   const Ring& ring) {
  if (i >= j) throw contract_error("positive-part generator needs i < j");
  if (!A.upper_strict()) throw contract_error("positive-part product needs an upper-strict index");
  HypLC out = h_gen_mul(k, i, j, A, PVec(A.n), ring);
  for (const auto& [key, c] : out)
    if (!key.A.upper_strict() || key.lam.sum() != 0)
      throw internal_error("positive-part product left the positive part");
  return out;
}

HypLC HyperEngine::gen_apply(long long k, long long i_in, long long j_in,
                             const HypLC& y) {
  if (y.empty()) return {};
  int n = y.begin()->first.A.n;
  // canonical generator key: row residue in 1..n
  long long i = ((i_in - 1) % n + n) % n + 1;
  long long j = j_in - (i_in - i);
  auto& cache = gencache_[{k, i, j}];
  HypLC out;
  for (const auto& [key, c] : y) {
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, h_gen_mul(k, i, j, key.A, key.lam, ring)).first;
    add_scaled(out, it->second, c, ring);
  }
  return out;
}

HypLC HyperEngine::monomial_chain(const HKey& key, const HypLC& y) {
  // E-chain (H|lam) F-chain applied to y, factors right to left
  std::vector<OffEntry> up, lo;
  for (const auto& e : key.A.off) (e.j > e.i ? up : lo).push_back(e);
  HypLC cur = y;
  for (auto it = lo.rbegin(); it != lo.rend(); ++it)
    cur = gen_apply(it->a, it->i, it->j, cur);
  cur = hmul(key.lam, cur, ring);
  for (auto it = up.rbegin(); it != up.rend(); ++it)
    cur = gen_apply(it->a, it->i, it->j, cur);
  return cur;
}

const HypLC& HyperEngine::mcorrections(const HKey& key) {
  auto hit = mcorr_.find(key);
  if (hit != mcorr_.end()) return hit->second;
  HypLC e = monomial_chain(key, h_unit(key.A.n));
  auto lead = e.find(key);
  if (lead == e.end() || lead->second != 1)
    throw internal_error("monomial chain: leading coefficient is not 1");
  e.erase(lead);
  if (!e.empty() && !HOrder{}(std::prev(e.end())->first, key))
    throw internal_error("monomial chain: correction term not strictly lower");
  return mcorr_.emplace(key, std::move(e)).first->second;
}

HypLC HyperEngine::to_monomial_coords(const HypLC& x) {
  HypLC rest = x, out;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    HKey key = top->first;
    Rat c = top->second;
    add_term(out, key, c, ring);
    rest.erase(top);
    add_scaled(rest, mcorrections(key), -c, ring);
  }
  return out;
}

HypLC HyperEngine::mul(const HypLC& x, const HypLC& y) {
  if (!x.empty() && !y.empty() &&
      x.begin()->first.A.n != y.begin()->first.A.n)
    throw contract_error("mul: context mismatch");
  HypLC out;
  for (const auto& [key, c] : to_monomial_coords(x))
    add_scaled(out, monomial_chain(key, y), c, ring);
  if (ring.kind == RingKind::Z && !all_integral(out))
    throw internal_error("product left the integral form");
  return out;
}

HypLC HyperEngine::hall_chain(const PMat& A, const HypLC& y) {
  HypLC cur = y;
  for (auto it = A.off.rbegin(); it != A.off.rend(); ++it) {
    HypLC next;
    for (const auto& [key, c] : cur)
      add_scaled(next, hall_gen_mul(it->a, it->i, it->j, key.A, ring), c, ring);
    cur = std::move(next);
  }
  return cur;
}

const HypLC& HyperEngine::hall_corrections(const PMat& A) {
  auto hit = hallcorr_.find(A);
  if (hit != hallcorr_.end()) return hit->second;
  HypLC e = hall_chain(A, h_unit(A.n));
  HKey key{A, PVec(A.n)};
  auto lead = e.find(key);
  if (lead == e.end() || lead->second != 1)
    throw internal_error("positive-part chain: leading coefficient is not 1");
  e.erase(lead);
  for (const auto& [d, c] : e)
    if (d.A.sigma_off() >= A.sigma_off())
      throw internal_error("positive-part chain: correction not strictly lower");
  return hallcorr_.emplace(A, std::move(e)).first->second;
}

HypLC HyperEngine::hall_mul_elem(const PMat& A, const HypLC& y) {
  if (!A.upper_strict())
    throw contract_error("positive-part product needs an upper-strict index");
  if (A.off.empty()) return y;
  HypLC out = hall_chain(A, y);
  for (const auto& [d, c] : hall_corrections(A))
    add_scaled(out, hall_mul_elem(d.A, y), -c, ring);
  return out;
}

// conserved grading of positive-part products: entries weighted by length
static long long length_weight(const PMat& A) {
  long long w = 0;
  for (const auto& e : A.off) w += e.a * (e.j - e.i);
  return w;
}

HypLC HyperEngine::hall_mul(const PMat& A, const PMat& B) {
  if (!A.upper_strict() || !B.upper_strict())
    throw contract_error("positive-part product needs upper-strict indices");
  HypLC out = hall_mul_elem(A, h_elem(B, PVec(B.n)));
  long long want = length_weight(A) + length_weight(B);
  for (const auto& [key, c] : out)
    if (length_weight(key.A) != want || c <= 0 ||
        boost::multiprecision::denominator(c) != 1)
      throw internal_error("positive-part product is not graded with nonnegative integers");
  return out;
}

HypLC HyperEngine::upper_product(const std::vector<HypLC>& factors) {
  int n = 0;
  for (const auto& f : factors)
    if (!f.empty()) n = f.begin()->first.A.n;
  if (n == 0) throw contract_error("empty context");
  HypLC cur = h_unit(n);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    HypLC next;
    for (const auto& [key, c] : *it)
      add_scaled(next, hall_mul_elem(key.A, cur), c, ring);
    cur = std::move(next);
  }
  return cur;
}

HypLC HyperEngine::lower_product(const std::vector<HypLC>& factors) {
  // f1 ... fm = transpose(transpose(fm) ... transpose(f1))
  int n = 0;
  for (const auto& f : factors)
    if (!f.empty()) n = f.begin()->first.A.n;
  if (n == 0) throw contract_error("empty context");
  HypLC cur = h_unit(n);
  for (const auto& f : factors) {
    HypLC next;
    for (const auto& [key, c] : f)
      add_scaled(next, hall_mul_elem(key.A.transpose(), cur), c, ring);
    cur = std::move(next);
  }
  return h_transpose(cur, ring);
}

HypLC HyperEngine::xfactor(int n, long long i, long long j, long long a) {
  PVec probe(n);
  if (probe.res(i) != probe.res(j))
    return h_elem(PMat::unit(n, i, j, a), PVec(n));
  return ray_partition_sum(n, a, i, (j - i) / n);
}

HypLC HyperEngine::expand(HBasis from, const HKey& key) {
  int n = key.A.n;
  switch (from) {
    case HBasis::B:
      return h_elem(key.A, key.lam);
    case HBasis::M:
      return monomial_chain(key, h_unit(n));
    case HBasis::Bp: {
      // A<0>(H|lam) = A<lam> + sum over dt < lam of (co(A) over lam-dt) A<dt>
      HypLC out = h_elem(key.A, key.lam);
      const PVec co = key.A.co();
      each_below(key.lam, [&](const PVec& dt) {
        if (dt == key.lam) return;
        add_term(out, HKey{key.A, dt}, Rat(vec_binom(co, key.lam - dt)), ring);
      });
      return out;
    }
    case HBasis::C: {
      HypLC low = hmul(key.lam, h_elem(key.A.lower(), PVec(n)), ring);
      return mul(h_elem(key.A.upper(), PVec(n)), low);
    }
    case HBasis::G: {
      std::vector<HypLC> up, lo;
      for (const auto& e : key.A.off)
        (e.j > e.i ? up : lo).push_back(xfactor(n, e.i, e.j, e.a));
      HypLC lowpart = lo.empty() ? h_unit(n) : lower_product(lo);
      HypLC uppart = up.empty() ? h_unit(n) : upper_product(up);
      return mul(uppart, hmul(key.lam, lowpart, ring));
    }
  }
  throw internal_error("unknown basis tag");
}

HypLC HyperEngine::convert(const HypLC& x, HBasis from, HBasis to) {
  HypLC inb;
  if (from == HBasis::B)
    inb = x;
  else
    for (const auto& [key, c] : x) add_scaled(inb, expand(from, key), c, ring);
  if (to == HBasis::B) return inb;
  HypLC out;
  while (!inb.empty()) {
    auto top = std::prev(inb.end());
    HKey key = top->first;
    Rat c = top->second;
    add_term(out, key, c, ring);
    HypLC e = expand(to, key);
    auto lead = e.find(key);
    if (lead == e.end() || lead->second != 1)
      throw internal_error("conversion target is not unitriangular");
    add_scaled(inb, e, -c, ring);
  }
  if (ring.kind == RingKind::Z && !all_integral(out))
    throw internal_error("conversion left the integral form");
  return out;
}

MatLC evaluate_xi(const HypLC& x, long long r, const Ring& ring) {
  MatLC out;
  for (const auto& [key, c] : x)
    add_scaled(out, elem_brace(key.A, key.lam, r, ring), c, ring);
  return out;
}

bool divided_power_check(int n, long long i, long long j, long long k) {
  PVec probe(n);
  if (i == j || probe.res(i) == probe.res(j))
    throw contract_error("divided powers need distinct residues");
  if (k < 0) throw contract_error("power must be nonnegative");
  HyperEngine eng(Ring::Q());
  HypLC e = h_elem(PMat::unit(n, i, j, 1), PVec(n));
  HypLC pow = h_unit(n);
  Int fac = 1;
  for (long long s = 1; s <= k; ++s) {
    pow = eng.mul(e, pow);
    fac *= s;
  }
  return scaled(pow, Rat(1) / Rat(fac), Ring::Q()) ==
         h_elem(k ? PMat::unit(n, i, j, k) : PMat(n), PVec(n));
}

}  // namespace afs
