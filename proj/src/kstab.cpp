#include "kstab.hpp"

namespace afs {

namespace {

PVec const_vec(int n, long long v) {
  return PVec(n, std::vector<long long>(size_t(n), v));
}

void require_stab_support(const MatLC& x, const char* who) {
  for (const auto& [M, c] : x)
    if (!in_theta_tilde(M, M.n))
      throw contract_error(std::string(who) +
                           ": negative off-diagonal entry in index");
}

void require_quot_support(const KBarLC& x, const ModPContext& ctx,
                          const char* who) {
  for (const auto& [k, c] : x) {
    if (!k.A.zero_diag() || !k.A.nonneg_off() || !k.A.entry_bound(ctx.q))
      throw contract_error(std::string(who) + ": bad off-diagonal index");
    for (long long v : k.lam.v)
      if (v < 0 || v >= ctx.q)
        throw contract_error(std::string(who) + ": residue out of range");
  }
}

template <class F>
void residue_odometer(int n, long long q, F&& fn) {
  std::vector<long long> v(size_t(n), 0);
  for (;;) {
    fn(PVec(n, v));
    size_t pos = 0;
    while (pos < v.size() && ++v[pos] == q) v[pos++] = 0;
    if (pos == v.size()) return;
  }
}

}  // namespace

MatLC k_gen_mul(long long k, long long i, long long j, const PMat& A,
                const Ring& ring) {
  if (!in_theta_tilde(A, A.n))
    throw contract_error("k_gen_mul: negative off-diagonal entry in index");
  if (k == 0) {  // the left factor collapses to the local identity [diag(ro A)]
    MatLC out;
    add_term(out, A, Rat(1), ring);
    return out;
  }
  return gen_mul(k, i, j, A, GenMode::AnyDiagonal, ring);
}

MatLC k_truncate(const MatLC& x, long long r) {
  MatLC out;
  for (const auto& [M, c] : x)
    if (in_theta(M, M.n, r)) out.emplace(M, c);
  return out;
}

MatLC k_mul(const MatLC& x, const MatLC& y, Engine& eng) {
  if (eng.mode != GenMode::AnyDiagonal)
    throw contract_error("k_mul: engine must allow arbitrary diagonals");
  require_stab_support(x, "k_mul");
  require_stab_support(y, "k_mul");
  return eng.mul(x, y);
}

bool in_level(const MatLC& x, const ModPContext& ctx) {
  for (const auto& [M, c] : x)
    if (!M.nonneg_off() || !M.entry_bound(ctx.q)) return false;
  return true;
}

MatLC tau(const PVec& lam, const MatLC& x, const ModPContext& ctx) {
  if (!in_level(x, ctx))
    throw contract_error("tau: element outside the level subalgebra");
  MatLC out;
  for (const auto& [M, c] : x) {
    PMat S = M;
    S.diag = S.diag + lam * ctx.q;
    add_term(out, S, c, Ring::Q());
  }
  return out;
}

KBarLC kbar_elem(const PMat& offpart, const PVec& residues,
                 const ModPContext& ctx) {
  if (!offpart.zero_diag() || !offpart.nonneg_off() ||
      !offpart.entry_bound(ctx.q))
    throw contract_error("kbar_elem: bad off-diagonal index");
  KBarLC out;
  add_term(out, HKey{offpart, residues.bar(ctx.q)}, Rat(1), Ring::Fp(ctx.p));
  return out;
}

KBarLC kbar_project(const MatLC& x, const ModPContext& ctx) {
  if (!in_level(x, ctx))
    throw contract_error("kbar_project: element outside the level subalgebra");
  Ring fp = Ring::Fp(ctx.p);
  KBarLC out;
  for (const auto& [M, c] : x)
    add_term(out, HKey{M.offdiag_part(), M.diag.bar(ctx.q)}, c, fp);
  return out;
}

KBarLC kbar_mul_with_lift(const KBarLC& x, const KBarLC& y,
                          const ModPContext& ctx, long long lift_shift) {
  require_quot_support(x, ctx, "kbar_mul");
  require_quot_support(y, ctx, "kbar_mul");
  Ring fp = Ring::Fp(ctx.p);
  Engine eng(GenMode::AnyDiagonal, fp);
  KBarLC out;
  for (const auto& [ky, cy] : y) {
    PMat At = ky.A;
    At.diag = ky.lam + const_vec(At.n, lift_shift * ctx.q);
    PVec rowprof = At.ro();
    for (const auto& [kx, cx] : x) {
      // the left diagonal is forced by requiring exact profile agreement;
      // only its residue class is free, and that must match the stored one
      PVec need = rowprof - kx.A.co();
      if (!(need.bar(ctx.q) == kx.lam)) continue;
      PMat Bt = kx.A;
      Bt.diag = need;
      MatLC z = eng.mul_basis(Bt, MatLC{{At, Rat(1)}});
      for (const auto& [M, c] : z) {
        if (!M.entry_bound(ctx.q))
          throw internal_error("kbar_mul: overflow term survived reduction");
        add_term(out, HKey{M.offdiag_part(), M.diag.bar(ctx.q)}, cx * cy * c,
                 fp);
      }
    }
  }
  return out;
}

KBarLC kbar_mul(const KBarLC& x, const KBarLC& y, const ModPContext& ctx) {
  return kbar_mul_with_lift(x, y, ctx, 0);
}

KBarLC phi_h(const HypLC& x, const ModPContext& ctx) {
  if (!membership_h(x, ctx))
    throw contract_error("phi_h: element outside the level subalgebra");
  Ring fp = Ring::Fp(ctx.p);
  KBarLC out;
  for (const auto& [k, c] : x)
    residue_odometer(k.A.n, ctx.q, [&](const PVec& mu) {
      add_term(out, HKey{k.A, mu}, c * Rat(vec_binom(mu, k.lam)), fp);
    });
  return out;
}

KHatLC psi_h(const KBarLC& x) { return x; }

KHatLC khat_mul(const KHatLC& x, const KHatLC& y, const ModPContext& ctx) {
  return kbar_mul_with_lift(x, y, ctx, 1);
}

bool zeta_consistency(const HypLC& x, const ModPContext& ctx) {
  if (!membership_h(x, ctx))
    throw contract_error("zeta_consistency: element outside the level");
  Ring fp = Ring::Fp(ctx.p);
  KHatLC direct;
  for (const auto& [k, c] : x)
    residue_odometer(k.A.n, ctx.q, [&](const PVec& mu) {
      // bundle the all-integer-diagonals expansion into residue classes,
      // reading the coefficient off a representative outside [0, p^h)
      PVec rep = mu + const_vec(k.A.n, ctx.q);
      add_term(direct, HKey{k.A, mu}, c * Rat(vec_binom(rep, k.lam)), fp);
    });
  return direct == psi_h(phi_h(x, ctx));
}

}  // namespace afs
