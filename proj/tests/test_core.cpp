#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "lincomb.hpp"
#include "periodic.hpp"
#include "ring.hpp"

using namespace afs;

TEST_CASE("generalized binomials: values, negatives, vanishing") {
  CHECK(gbinom(5, 2) == 10);
  CHECK(gbinom(0, 0) == 1);
  CHECK(gbinom(3, 5) == 0);
  CHECK(gbinom(-1, 3) == -1);
  CHECK(gbinom(-1, 4) == 1);
  CHECK(gbinom(-3, 2) == 6);
  CHECK(gbinom(Int(-2), 3) == -4);
  // ordinary case agrees with factorials
  for (long long m = 0; m <= 8; ++m)
    for (long long k = 0; k <= m; ++k)
      CHECK(gbinom(m, k) == factorial(m) / (factorial(k) * factorial(m - k)));
  // Pascal recurrence holds for all integer tops
  for (long long m = -6; m <= 6; ++m)
    for (long long k = 1; k <= 5; ++k)
      CHECK(gbinom(m, k) == gbinom(m - 1, k) + gbinom(m - 1, k - 1));
}

TEST_CASE("digitwise binomial mod p matches direct reduction") {
  for (long long p : {2, 3, 5})
    for (long long t = -30; t <= 30; ++t)
      for (long long s = 0; s <= 12; ++s) {
        Int direct = gbinom(t, s) % p;
        long long want = mod_ll(direct.convert_to<long long>(), p);
        CHECK(binom_mod_p(t, s, p) == want);
      }
}

TEST_CASE("multinomial") {
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(multinomial({}) == 1);
  CHECK(multinomial({0, 3}) == 1);
  CHECK_THROWS_AS(multinomial({-1, 2}), contract_error);
}

TEST_CASE("mod_ll stays in range on negatives") {
  CHECK(mod_ll(-1, 3) == 2);
  CHECK(mod_ll(-3, 3) == 0);
  CHECK(mod_ll(7, 3) == 1);
}

TEST_CASE("ring normalization") {
  Ring z = Ring::Z(), q = Ring::Q(), f5 = Ring::Fp(5);
  CHECK(z.normalize(Rat(7, 2)) == Rat(7, 2));
  CHECK(q.name() == "Q");
  CHECK(f5.normalize(Rat(3, 4)) == 2);  // 3 * 4^{-1} = 3*4 = 12 = 2 (mod 5)
  CHECK(f5.normalize(Rat(-1)) == 4);
  CHECK(f5.is_zero(Rat(10)));
  CHECK_THROWS_AS(f5.normalize(Rat(1, 5)), contract_error);
  CHECK_THROWS_AS(Ring::Fp(1), contract_error);
}

TEST_CASE("periodic vectors") {
  PVec lam(2, {3, 1});
  CHECK(lam.at(1) == 3);
  CHECK(lam.at(2) == 1);
  CHECK(lam.at(3) == 3);   // period 2
  CHECK(lam.at(0) == 1);   // residue 2
  CHECK(lam.at(-1) == 3);  // residue 1
  CHECK(lam.sum() == 4);
  CHECK(PVec::eps(3, 5) == PVec(3, {0, 1, 0}));
  CHECK(PVec(2, {5, -3}).bar(4) == PVec(2, {1, 1}));
  CHECK(leq_weights(PVec(2, {1, 1}), PVec(2, {1, 2})));
  CHECK(!lt_weights(PVec(2, {1, 1}), PVec(2, {1, 1})));
  CHECK(vec_binom(PVec(2, {2, 3}), PVec(2, {1, 1})) == 6);
  CHECK(vec_binom(PVec(2, {-1, 3}), PVec(2, {1, 0})) == -1);
  CHECK(vec_binom(lam, PVec(2, {0, 0})) == 1);
}

TEST_CASE("periodic matrix storage canonicalizes by row residue") {
  PMat A(2);
  A.add(3, 4, 1);  // same position class as (1,2)
  CHECK(A.entry(1, 2) == 1);
  CHECK(A.entry(3, 4) == 1);
  CHECK(A.entry(5, 6) == 1);
  CHECK(A.entry(1, 4) == 0);
  A.add(1, 2, -1);
  CHECK(A == PMat(2));  // zero entries dropped
  A.add(4, 4, 5);  // diagonal folds by residue
  CHECK(A.diag == PVec(2, {0, 5}));
  CHECK(A.off.empty());
}

TEST_CASE("row and column sums, entry totals") {
  PMat A = PMat::unit(2, 1, 2) + PMat::unit(2, 2, 1);
  CHECK(A.ro() == PVec(2, {1, 1}));
  CHECK(A.co() == PVec(2, {1, 1}));
  CHECK(A.sigma() == 2);
  CHECK(A.sigma_off() == 2);
  CHECK(A.sigma_vec() == PVec(2, {0, 2}));

  PMat B = PMat::unit(2, 1, 4);  // column 4 has residue 2
  CHECK(B.ro() == PVec(2, {1, 0}));
  CHECK(B.co() == PVec(2, {0, 1}));
  CHECK(B.sigma_vec() == PVec(2, {0, 1}));

  PMat C = PMat::unit(2, 2, -1);  // column -1 has residue 1
  CHECK(C.co() == PVec(2, {1, 0}));
  CHECK(C.sigma_vec() == PVec(2, {0, 1}));
}

TEST_CASE("transpose is an involution matching entries") {
  PMat A(3);
  A.add(1, 5, 2);
  A.add(2, 1, 1);
  A.add(3, 3, 4);
  PMat T = A.transpose();
  for (long long i = -3; i <= 6; ++i)
    for (long long j = -3; j <= 6; ++j) CHECK(T.entry(j, i) == A.entry(i, j));
  CHECK(T.transpose() == A);
}

TEST_CASE("triangular parts and bounds") {
  PMat A(2);
  A.add(1, 2, 1);
  A.add(2, 1, 3);
  A.add(1, 1, 2);
  CHECK(A.upper().off.size() == 1);
  CHECK(A.lower().off.size() == 1);
  CHECK(A.upper().zero_diag());
  CHECK(A.upper().upper_strict());
  CHECK(A.lower().lower_strict());
  CHECK(A.offdiag_part().sigma() == 4);
  CHECK(A.bounded(6));
  CHECK(!A.bounded(5));
  CHECK(A.entry_bound(4));
  CHECK(!A.entry_bound(3));
}

TEST_CASE("composition enumeration") {
  CHECK(compositions(2, 3).size() == 4);
  CHECK(compositions(3, 2).size() == 6);
  for (const PVec& c : compositions(3, 5)) {
    CHECK(c.sum() == 5);
    CHECK(c.nonneg());
  }
  CHECK(compositions(1, 0).size() == 1);
}

TEST_CASE("band support enumeration") {
  // n=2, r=2, window 1: 2 diagonal slots + 4 off slots
  auto mats = enumerate_band(2, 2, 1);
  CHECK(mats.size() == 21);  // C(7,2) compositions of 2 into 6 slots
  for (const PMat& A : mats) {
    CHECK(A.sigma() == 2);
    CHECK(A.nonneg_off());
    CHECK(A.diag.nonneg());
    for (const auto& e : A.off) CHECK(std::abs(e.j - e.i) <= 1);
  }
  // all distinct
  std::set<PMat> s(mats.begin(), mats.end());
  CHECK(s.size() == mats.size());
}

TEST_CASE("linear combinations cancel and normalize") {
  Ring z = Ring::Z(), f3 = Ring::Fp(3);
  LinComb<int> lc;
  add_term(lc, 7, Rat(1), z);
  add_term(lc, 7, Rat(-1), z);
  CHECK(lc.empty());
  add_term(lc, 1, Rat(3), f3);
  CHECK(lc.empty());
  add_term(lc, 1, Rat(5), f3);
  CHECK(lc[1] == 2);
  LinComb<int> other{{2, Rat(1, 2)}};
  add_scaled(lc, other, Rat(2), z);
  CHECK(lc[2] == 1);
  CHECK(all_integral(lc));
  add_term(lc, 3, Rat(1, 2), z);
  CHECK(!all_integral(lc));
}

TEST_CASE("term order sorts by off-diagonal weight first") {
  PMat a = PMat::diagonal(PVec(2, {2, 0}));
  PMat b = PMat::unit(2, 1, 2) + PMat::diagonal(PVec(2, {0, 1}));
  TermOrder lt;
  CHECK(lt(a, b));
  CHECK(!lt(b, a));
}
