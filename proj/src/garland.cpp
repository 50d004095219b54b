#include "garland.hpp"

#include <algorithm>

namespace afs {

GPoly g_const(const Rat& c) {
  GPoly f;
  add_term(f, GMono{}, c, Ring::Q());
  return f;
}

GPoly g_x(long long m) {
  if (m < 1) throw contract_error("variable index must be >= 1");
  return GPoly{{GMono{m}, Rat(1)}};
}

GPoly g_mul(const GPoly& a, const GPoly& b) {
  GPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      GMono m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      add_term(out, m, ca * cb, Ring::Q());
    }
  return out;
}

GPoly g_dplus(const GPoly& a) {
  GPoly out;
  for (const auto& [m, c] : a)
    for (size_t s = 0; s < m.size(); ++s) {
      if (s && m[s] == m[s - 1]) continue;  // distinct slots only, once each
      long long mult = std::count(m.begin(), m.end(), m[s]);
      GMono nm = m;
      nm[s] += 1;
      std::sort(nm.begin(), nm.end());
      add_term(out, nm, c * Rat(m[s] * mult), Ring::Q());
    }
  return out;
}

long long mono_weight(const GMono& m) {
  long long w = 0;
  for (long long x : m) w += x;
  return w;
}

std::string gpoly_str(const GPoly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : f) {
    if (!s.empty()) s += " + ";
    s += c.str();
    for (size_t t = 0; t < m.size(); ++t) s += "*X" + std::to_string(m[t]);
  }
  return s;
}

GPoly lambda_poly(long long k) {
  if (k < 0) throw contract_error("degree must be nonnegative");
  std::vector<GPoly> L(k + 1);
  L[0] = g_const(Rat(1));
  for (long long d = 1; d <= k; ++d) {
    GPoly acc;
    for (long long s = 0; s < d; ++s)
      add_scaled(acc, g_mul(L[s], g_x(d - s)), Rat(1), Ring::Q());
    L[d] = scaled(acc, Rat(1) / Rat(d), Ring::Q());
  }
  return L[k];
}

HypLC psi(int n, long long i, long long l, const GPoly& f, HyperEngine& eng) {
  if (l == 0) throw contract_error("ray step must be nonzero");
  if (l < 0) return h_transpose(psi(n, i, -l, f, eng), eng.ring);
  HypLC out;
  for (const auto& [m, c] : f) {
    HypLC cur = h_unit(n);
    for (long long mm : m)
      cur = eng.hall_mul_elem(PMat::unit(n, i, i + mm * l * n, 1), cur);
    add_scaled(out, cur, c, eng.ring);
  }
  return out;
}

HypLC partition_rhs(int n, long long k, long long i, long long l) {
  return ray_partition_sum(n, k, i, l);
}

std::map<long long, long long> count_of_parts(const std::vector<long long>& parts) {
  std::map<long long, long long> counts;
  for (long long p : parts) {
    if (p < 1) throw contract_error("parts must be positive");
    ++counts[p];
  }
  return counts;
}

HypLC counts_elem(int n, const std::map<long long, long long>& counts,
                  long long i, long long l) {
  if (l == 0) throw contract_error("ray step must be nonzero");
  PMat A(n);
  for (const auto& [s, b] : counts)
    if (b) A.add(i, i + s * l * n, b);
  return h_elem(A, PVec(n));
}

HypLC garland_monomial(const PMat& A, HyperEngine& eng) {
  if (!in_theta_pm(A, A.n))
    throw contract_error("index must have zero diagonal and nonnegative off entries");
  return eng.expand(HBasis::G, HKey{A, PVec(A.n)});
}

}  // namespace afs
