#include "verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "garland.hpp"
#include "kstab.hpp"

namespace afs {

namespace {

const Ring kZ = Ring::Z();

struct Checker {
  long long checks = 0;
  bool pass = true;
  std::string detail;

  void expect(bool ok, const char* what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  template <class F>
  void expect_lazy(bool ok, F&& describe) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = describe();
    }
  }
};

std::vector<PMat> offdiag_parts(int n, long long smax, long long W) {
  std::vector<PMat> out;
  for (long long s = 0; s <= smax; ++s)
    for (const auto& A : enumerate_band(n, s, W))
      if (A.zero_diag()) out.push_back(A);
  return out;
}

std::vector<PVec> weight_box(int n, long long lo, long long hi) {
  std::vector<PVec> out;
  std::vector<long long> v(size_t(n), lo);
  for (;;) {
    out.push_back(PVec(n, v));
    size_t pos = 0;
    while (pos < v.size() && ++v[pos] > hi) v[pos++] = lo;
    if (pos == v.size()) return out;
  }
}

// off-diagonal parts on the slots j in (i-W, i+W], entries in [0,q)
std::vector<PMat> level_offparts(int n, long long q, long long W) {
  std::vector<std::pair<long long, long long>> slots;
  for (long long i = 1; i <= n; ++i)
    for (long long j = i - W + 1; j <= i + W; ++j)
      if (j != i) slots.emplace_back(i, j);
  std::vector<PMat> out;
  std::vector<long long> v(slots.size(), 0);
  for (;;) {
    PMat A(n);
    for (size_t s = 0; s < slots.size(); ++s)
      if (v[s]) A.add(slots[s].first, slots[s].second, v[s]);
    out.push_back(A);
    size_t pos = 0;
    while (pos < v.size() && ++v[pos] == q) v[pos++] = 0;
    if (pos == v.size()) return out;
  }
}

// --------------------------------------------------------------------------
// 1. generator formulas against the double-coset convolution oracle

SuiteResult suite_schur_formula(const SuiteOptions& opt) {
  SuiteResult res{"schur-formula",
                  "generator products in the finite convolution algebras "
                  "match the double-coset oracle exactly",
                  false, 0, "", 0};
  Checker ck;
  for (int n : {2, 3}) {
    if (opt.n && n != opt.n) continue;
    for (long long r : {2LL, 3LL, 4LL}) {
      if (opt.r && r != opt.r) continue;
      long long W = 2 * n;
      for (const PMat& A : enumerate_band(n, r, W)) {
        PVec roA = A.ro();
        for (long long h = 1; h <= n; ++h)
          for (long long j = h - W; j <= h + W; ++j) {
            if (j == h) continue;
            long long margin = roA.at(j);
            for (long long k = 1; k <= std::min<long long>(3, margin); ++k) {
              PMat B = PMat::unit(n, h, j, k);
              B.diag = roA - PVec::eps(n, j) * k;
              MatLC lhs = gen_mul(k, h, j, A, GenMode::NonNegative, kZ);
              MatLC rhs = mul_by_oracle(MatLC{{B, Rat(1)}}, MatLC{{A, Rat(1)}}, kZ);
              ck.expect_lazy(lhs == rhs, [&] {
                return "mismatch at n=" + std::to_string(n) +
                       " r=" + std::to_string(r) + " k=" + std::to_string(k) +
                       " row=" + std::to_string(h) + " col=" + std::to_string(j) +
                       " A=" + A.str();
              });
            }
          }
      }
    }
  }
  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 2. associativity in the finite algebra and the stabilized algebra

SuiteResult suite_associativity(const SuiteOptions& opt) {
  SuiteResult res{"associativity",
                  "(xy)z = x(yz) on seeded random triples, finite and "
                  "stabilized algebras",
                  false, 0, "", 0};
  Checker ck;
  std::mt19937_64 rng(opt.seed);

  {  // finite algebra of rank 2, degree 3
    Engine eng(GenMode::NonNegative, kZ);
    auto mats = enumerate_band(2, 3, 3);
    int done = 0;
    while (done < 200) {
      const PMat& X = mats[rng() % mats.size()];
      const PMat& Y = mats[rng() % mats.size()];
      const PMat& Z = mats[rng() % mats.size()];
      if (!(X.co() == Y.ro()) || !(Y.co() == Z.ro())) continue;
      MatLC x{{X, Rat(1)}}, y{{Y, Rat(1)}}, z{{Z, Rat(1)}};
      ck.expect(eng.mul(eng.mul(x, y), z) == eng.mul(x, eng.mul(y, z)),
                "finite-algebra associativity failure");
      ++done;
    }
  }

  {  // stabilized algebra: generator-type factors, diagonals in [-3,3]
    Engine eng(GenMode::AnyDiagonal, kZ);
    auto gen = [&](PMat& out) {
      long long i = 1 + (long long)(rng() % 2);
      long long j = i;
      while (j == i) j = i - 2 + (long long)(rng() % 5);
      long long k = 1 + (long long)(rng() % 2);
      out = PMat::unit(2, i, j, k);
      out.diag = PVec(2, {(long long)(rng() % 7) - 3, (long long)(rng() % 7) - 3});
    };
    int done = 0;
    while (done < 200) {
      PMat X(2), Y(2), Z(2);
      gen(X);
      gen(Y);
      gen(Z);
      if (!(X.co() == Y.ro()) || !(Y.co() == Z.ro())) continue;
      MatLC x{{X, Rat(1)}}, y{{Y, Rat(1)}}, z{{Z, Rat(1)}};
      ck.expect(k_mul(k_mul(x, y, eng), z, eng) ==
                    k_mul(x, k_mul(y, z, eng), eng),
                "stabilized-algebra associativity failure");
      ++done;
    }
  }

  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 3. triangular expansions with unit leading coefficients, and round trips

SuiteResult suite_triangularity(const SuiteOptions& opt) {
  SuiteResult res{"triangularity",
                  "ordered-monomial, symmetrized, and mixed-monomial "
                  "expansions are unitriangular; conversions round-trip "
                  "exactly over Z",
                  false, 0, "", 0};
  Checker ck;

  auto sweep = [&](int n, long long smax, long long lmax) {
    HyperEngine eng(kZ);
    auto offs = offdiag_parts(n, smax, 2);
    auto lams = weight_box(n, 0, lmax);
    for (HBasis kind : {HBasis::M, HBasis::C, HBasis::G}) {
      for (const auto& A : offs)
        for (const auto& lam : lams) {
          HKey key{A, lam};
          HypLC exp = eng.expand(kind, key);
          auto it = exp.find(key);
          ck.expect(it != exp.end() && it->second == 1,
                    "expansion leading coefficient is not 1");
          bool lower = true;
          for (const auto& [t, c] : exp)
            if (!(t == key) && !HOrder{}(t, key)) lower = false;
          ck.expect(lower, "expansion has a correction above the key");
          HypLC back = eng.convert(exp, HBasis::B, kind);
          ck.expect(back == HypLC{{key, Rat(1)}},
                    "basis conversion round trip is not the identity");
        }
    }
  };
  if (!opt.n || opt.n == 2) sweep(2, 4, 2);
  if (!opt.n || opt.n == 3) sweep(3, 3, 1);

  {  // mixed monomials built from real and imaginary column factors
    HyperEngine eng(Ring::Q());
    for (const auto& A : offdiag_parts(2, 4, 2)) {
      HypLC u = garland_monomial(A, eng);
      ck.expect(all_integral(u), "mixed monomial has fractional coefficients");
      auto it = u.find(HKey{A, PVec(2)});
      ck.expect(it != u.end() && it->second == 1,
                "mixed monomial leading coefficient is not 1");
      bool lower = true;
      for (const auto& [t, c] : u)
        if (!(t.A == A) && t.A.sigma_off() >= A.sigma_off()) lower = false;
      ck.expect(lower, "mixed monomial correction of non-lower weight");
    }
  }

  {  // degree-r monomial family: leading index has the shifted diagonal
    ModPContext c21(2, 1);
    for (long long r : {2LL, 3LL}) {
      if (opt.r && r != opt.r) continue;
      for (const auto& [k, e] : little_inf_basis(LittleBasis::MPhr, 2, r, c21, 2)) {
        PMat lead = k.A;
        lead.diag = lead.diag + (k.lam - k.A.sigma_vec());
        auto it = e.find(lead);
        ck.expect(it != e.end() && it->second == 1,
                  "degree-r monomial leading coefficient is not 1");
        bool lower = true;
        for (const auto& [t, c] : e)
          if (!(t == lead) && t.sigma_off() >= k.A.sigma_off()) lower = false;
        ck.expect(lower, "degree-r monomial correction of non-lower weight");
      }
    }
  }

  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 4. the rank-2 commutator identity of the classical embedding

SuiteResult suite_classical_commutator(const SuiteOptions&) {
  SuiteResult res{"classical-commutator",
                  "EF - FE equals H_1 - H_2 in the integral form at rank 2",
                  false, 0, "", 0};
  Checker ck;
  HyperEngine eng(kZ);
  HypLC e = h_elem(PMat::unit(2, 1, 2), PVec(2));
  HypLC f = h_elem(PMat::unit(2, 2, 1), PVec(2));
  HypLC comm = eng.mul(e, f);
  add_scaled(comm, eng.mul(f, e), Rat(-1), kZ);
  HypLC want = h_elem(PMat(2), PVec::eps(2, 1));
  add_scaled(want, h_elem(PMat(2), PVec::eps(2, 2)), Rat(-1), kZ);
  ck.expect(comm == want, "EF - FE differs from H_1 - H_2");
  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 5. the imaginary-ray identity: row evaluation equals the partition sum

SuiteResult suite_garland_identity(const SuiteOptions& opt) {
  SuiteResult res{"garland-identity",
                  "row evaluation of the degree elements equals the closed "
                  "partition sum, with integral coefficients and p(k) terms",
                  false, 0, "", 0};
  Checker ck;
  static const long long pk[] = {1, 1, 2, 3, 5, 7};
  for (int n : {2, 3}) {
    if (opt.n && n != opt.n) continue;
    HyperEngine eng(Ring::Q());
    for (long long k = 1; k <= 5; ++k)
      for (long long i = 1; i <= n; ++i)
        for (long long l : {1LL, -1LL, 2LL}) {
          HypLC lhs = psi(n, i, l, lambda_poly(k), eng);
          HypLC rhs = partition_rhs(n, k, i, l);
          ck.expect_lazy(lhs == rhs, [&] {
            return "identity fails at n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " i=" + std::to_string(i) +
                   " l=" + std::to_string(l);
          });
          ck.expect(all_integral(lhs), "row evaluation is not integral");
          ck.expect((long long)lhs.size() == pk[k],
                    "term count differs from the partition number");
        }
  }
  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 6. binomial periodicity and vanishing modulo a prime power

SuiteResult suite_binomial_periodicity(const SuiteOptions&) {
  SuiteResult res{"binomial-periodicity",
                  "binom(t+p^h, s) = binom(t, s) and the overflow binomials "
                  "vanish, exhaustively mod p",
                  false, 0, "", 0};
  Checker ck;
  for (long long p : {2LL, 3LL})
    for (int h : {1, 2}) {
      long long q = 1;
      for (int t = 0; t < h; ++t) q *= p;
      for (long long t = -2 * q; t <= 2 * q; ++t)
        for (long long s = 0; s < q; ++s)
          ck.expect((gbinom(Int(t + q), s) - gbinom(Int(t), s)) % p == 0,
                    "periodicity fails");
      for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b) {
          if (a + b < q) continue;
          ck.expect(gbinom(Int(a + b), a) % p == 0, "overflow binomial nonzero");
        }
    }
  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 7. the level subalgebra: closure and its four bases

SuiteResult suite_level_closure(const SuiteOptions&) {
  SuiteResult res{"level-closure",
                  "level-1 span at p=2 is closed under generator and weight "
                  "actions; its four bases have size 256 with unitriangular "
                  "conversions over F_2",
                  false, 0, "", 0};
  Checker ck;
  ModPContext ctx(2, 1);
  HyperEngine eng(Ring::Fp(2));
  const long long W = 2;

  auto bfam = enumerate_basis(ModBasis::Bh, 2, ctx, W, eng);
  ck.expect(bfam.size() == 256, "divided-power basis size is not 256");

  auto mus = weight_box(2, 0, ctx.q - 1);
  for (const auto& [k, e] : bfam) {
    for (long long i = 1; i <= 2; ++i)
      for (long long j = i - W; j <= i + W; ++j) {
        if (j == i) continue;
        for (long long kk = 1; kk < ctx.q; ++kk)
          ck.expect(
              membership_h(reduce(h_gen_mul(kk, i, j, k.A, k.lam, kZ), ctx.p), ctx),
              "generator action leaves the level span");
      }
    for (const auto& mu : mus)
      ck.expect(membership_h(reduce(hmul(mu, e, kZ), ctx.p), ctx),
                "weight action leaves the level span");
  }

  for (ModBasis kind : {ModBasis::Mh, ModBasis::Ch, ModBasis::Gh}) {
    auto fam = enumerate_basis(kind, 2, ctx, W, eng);
    ck.expect(fam.size() == 256, "alternative basis size is not 256");
    for (const auto& [k, e] : fam) {
      ck.expect(membership_h(e, ctx), "basis element leaves the level span");
      auto it = e.find(k);
      ck.expect(it != e.end() && it->second == 1,
                "conversion leading coefficient is not 1");
      bool lower = true;
      for (const auto& [t, c] : e)
        if (!(t == k) && !HOrder{}(t, k)) lower = false;
      ck.expect(lower, "conversion correction above the key");
    }
  }

  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 8. stabilized algebra: oracle compatibility, diagonal shifts, pinned case

SuiteResult suite_stabilization(const SuiteOptions& opt) {
  SuiteResult res{"stabilization",
                  "stabilized generator products truncate to the finite "
                  "oracle; diagonal shifts are multiplicative mod 2 on all "
                  "windowed level-1 products; the negative-diagonal pinned "
                  "product is reproduced",
                  false, 0, "", 0};
  Checker ck;
  std::mt19937_64 rng(opt.seed);

  {  // pinned negative-diagonal product
    PMat A = PMat::unit(2, 2, 1);
    A.diag = PVec(2, {-1, 0});
    MatLC out = k_gen_mul(1, 1, 2, A, kZ);
    PMat want = PMat::unit(2, 1, 2) + PMat::unit(2, 2, 1);
    want.diag = PVec(2, {-1, -1});
    ck.expect(out == MatLC{{want, Rat(1)}},
              "pinned negative-diagonal product differs");
  }

  for (int n : {2, 3}) {  // truncation onto the finite algebra matches oracle
    if (opt.n && n != opt.n) continue;
    for (long long r : {2LL, 3LL}) {
      auto mats = enumerate_band(n, r, 2);
      int done = 0;
      while (done < 25) {
        const PMat& A = mats[rng() % mats.size()];
        long long h = 1 + (long long)(rng() % n);
        long long j = h;
        while (j == h) j = h - 2 + (long long)(rng() % 5);
        long long k = 1 + (long long)(rng() % 2);
        if (A.ro().at(j) < k) continue;
        PMat B = PMat::unit(n, h, j, k);
        B.diag = A.ro() - PVec::eps(n, j) * k;
        ck.expect(k_truncate(k_gen_mul(k, h, j, A, kZ), r) ==
                      mul_by_oracle(MatLC{{B, Rat(1)}}, MatLC{{A, Rat(1)}}, kZ),
                  "truncated stabilized product differs from the oracle");
        ++done;
      }
    }
  }

  {  // diagonal-shift homomorphism on every windowed level-1 product
    ModPContext ctx(2, 1);
    Engine eng(GenMode::AnyDiagonal, Ring::Fp(2));
    PVec shift(2, {1, 1});
    auto offs = level_offparts(2, ctx.q, 2);
    auto diags = weight_box(2, -1, 1);
    for (const auto& ob : offs)
      for (const auto& db : diags) {
        PMat B = ob;
        B.diag = db;
        MatLC tb = tau(shift, MatLC{{B, Rat(1)}}, ctx);
        for (const auto& oa : offs) {
          PMat A = oa;
          A.diag = B.co() - oa.ro();
          MatLC prod = eng.mul(MatLC{{B, Rat(1)}}, MatLC{{A, Rat(1)}});
          ck.expect(in_level(prod, ctx), "level product overflows the level");
          ck.expect(tau(shift, prod, ctx) ==
                        eng.mul(tb, tau(shift, MatLC{{A, Rat(1)}}, ctx)),
                    "diagonal shift is not multiplicative");
        }
      }
  }

  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 9. realization maps onto the residue quotient and class symbols

SuiteResult suite_realization(const SuiteOptions& opt) {
  SuiteResult res{"realization",
                  "the realization map is a unitriangular bijection on the "
                  "windowed level basis and multiplicative, the class-symbol "
                  "embedding is multiplicative, and the two completion "
                  "composites agree",
                  false, 0, "", 0};
  Checker ck;
  std::mt19937_64 rng(opt.seed);
  ModPContext ctx(2, 1);
  HyperEngine eng(Ring::Fp(2));
  const long long W = 2;

  auto bfam = enumerate_basis(ModBasis::Bh, 2, ctx, W, eng);
  std::set<HKey, HOrder> leads;
  for (const auto& [k, e] : bfam) {
    KBarLC img = phi_h(e, ctx);
    auto it = img.find(k);
    ck.expect(it != img.end() && it->second == 1,
              "realization image leading coefficient is not 1");
    bool tri = true;
    for (const auto& [s, c] : img)
      if (!(s.A == k.A) || (!(s == k) && s.lam.sum() <= k.lam.sum())) tri = false;
    ck.expect(tri, "realization image is not triangular");
    leads.insert(k);
  }
  ck.expect(leads.size() == bfam.size(),
            "realization leading symbols collide");

  for (int t = 0; t < 50; ++t) {  // multiplicativity on the quotient
    const auto& x = bfam[rng() % bfam.size()].second;
    const auto& y = bfam[rng() % bfam.size()].second;
    ck.expect(phi_h(eng.mul(x, y), ctx) ==
                  kbar_mul(phi_h(x, ctx), phi_h(y, ctx), ctx),
              "realization map is not multiplicative");
  }

  auto offs = level_offparts(2, ctx.q, W);
  for (int t = 0; t < 50; ++t) {  // class-symbol product recipe
    KBarLC x = kbar_elem(offs[rng() % offs.size()],
                         PVec(2, {(long long)(rng() % 2), (long long)(rng() % 2)}),
                         ctx);
    KBarLC y = kbar_elem(offs[rng() % offs.size()],
                         PVec(2, {(long long)(rng() % 2), (long long)(rng() % 2)}),
                         ctx);
    ck.expect(khat_mul(psi_h(x), psi_h(y), ctx) == psi_h(kbar_mul(x, y, ctx)),
              "class-symbol product differs from the quotient product");
  }

  for (int t = 0; t < 50; ++t) {  // the two completion composites agree
    HypLC x = bfam[rng() % bfam.size()].second;
    if (t % 2) add_scaled(x, bfam[rng() % bfam.size()].second, Rat(1), Ring::Fp(2));
    ck.expect(zeta_consistency(x, ctx), "completion composites disagree");
  }

  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 10. exact independence of the divided-power families

SuiteResult suite_injectivity(const SuiteOptions& opt) {
  SuiteResult res{"injectivity",
                  "seeded families of distinct divided-power indices have "
                  "full-rank stacked evaluation matrices over F_p",
                  false, 0, "", 0};
  Checker ck;
  for (long long p : {2LL, 3LL}) {
    ModPContext ctx(p, 1);
    std::mt19937_64 rng(opt.seed + (std::uint64_t)p);
    auto offs = offdiag_parts(2, 2, 2);
    for (int t = 0; t < 50; ++t) {
      std::set<HKey, HOrder> fam;
      size_t want = 1 + rng() % 6;
      while (fam.size() < want)
        fam.insert(HKey{offs[rng() % offs.size()],
                        PVec(2, {(long long)(rng() % 3), (long long)(rng() % 3)})});
      ck.expect(independence_check(std::vector<HKey>(fam.begin(), fam.end()), 2, ctx),
                "family evaluates to a rank-deficient matrix");
    }
  }
  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

// --------------------------------------------------------------------------
// 11. degree quotients of the level subalgebra

SuiteResult suite_little_schur(const SuiteOptions& opt) {
  SuiteResult res{"little-schur",
                  "the windowed degree-1 class basis has exactly 10 elements "
                  "and monomial-type bases are unitriangular against "
                  "class-type bases",
                  false, 0, "", 0};
  Checker ck;
  ModPContext ctx(2, 1);
  const long long W = 2;

  ck.expect(little_inf_basis(LittleBasis::Phr, 2, 1, ctx, W).size() == 10,
            "degree-1 class basis size is not 10");

  for (long long r : {1LL, 2LL}) {
    if (opt.r && r != opt.r) continue;
    auto phr = little_inf_basis(LittleBasis::Phr, 2, r, ctx, W);
    auto mhr = little_inf_basis(LittleBasis::Mhr, 2, r, ctx, W);
    ck.expect(phr.size() == mhr.size(),
              "class and monomial bases have different sizes");
    for (const auto& [k, e] : mhr) {
      HypLC cc = class_coords(e, 2, r, ctx);
      HKey lead{k.A, (k.lam - k.A.sigma_vec()).bar(ctx.q)};
      auto it = cc.find(lead);
      ck.expect(it != cc.end() && it->second == 1,
                "monomial leading class coefficient is not 1");
      bool lower = true;
      for (const auto& [t, c] : cc)
        if (!(t == lead) && t.A.sigma_off() >= k.A.sigma_off()) lower = false;
      ck.expect(lower, "monomial correction of non-lower weight");
    }
    auto pphr = little_inf_basis(LittleBasis::PPhr, 2, r, ctx, W);
    auto mphr = little_inf_basis(LittleBasis::MPhr, 2, r, ctx, W);
    ck.expect(pphr.size() == mphr.size(),
              "plain and monomial bases have different sizes");
  }

  res.pass = ck.pass;
  res.checks = ck.checks;
  res.detail = ck.detail;
  return res;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"schur-formula", suite_schur_formula},
      {"associativity", suite_associativity},
      {"triangularity", suite_triangularity},
      {"classical-commutator", suite_classical_commutator},
      {"garland-identity", suite_garland_identity},
      {"binomial-periodicity", suite_binomial_periodicity},
      {"level-closure", suite_level_closure},
      {"stabilization", suite_stabilization},
      {"realization", suite_realization},
      {"injectivity", suite_injectivity},
      {"little-schur", suite_little_schur},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : suite_table()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& [n, fn] : suite_table())
    if (n == name) {
      auto t0 = std::chrono::steady_clock::now();
      SuiteResult r = fn(opt);
      r.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      return r;
    }
  throw contract_error("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
  return out;
}

}  // namespace afs
