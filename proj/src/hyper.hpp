#pragma once
// Integral envelope of the loop algebra in the weighted-diagonal basis:
// closed-form generator and H-binomial actions, the triangular monomial
// bases with their unitriangular conversions, positive-part products, and
// degreewise evaluation onto the bounded endomorphism algebras.
#include <tuple>

#include "schur.hpp"

namespace afs {

// basis key: an index matrix with zero diagonal and nonnegative off entries,
// plus a binomial weight vector for the diagonal part
struct HKey {
  PMat A;
  PVec lam;
  bool operator==(const HKey& o) const { return A == o.A && lam == o.lam; }
};

// total order compatible with every triangular relation used here: terms
// drop either in off-diagonal weight, or (at equal index) componentwise in
// the weight vector
struct HOrder {
  bool operator()(const HKey& a, const HKey& b) const {
    auto sa = a.A.sigma_off(), sb = b.A.sigma_off();
    if (sa != sb) return sa < sb;
    auto wa = a.lam.sum(), wb = b.lam.sum();
    if (wa != wb) return wa < wb;
    if (!(a.A == b.A)) return a.A < b.A;
    return a.lam < b.lam;
  }
};

using HypLC = LinComb<HKey, HOrder>;

// zero diagonal and nonnegative off-diagonal entries
bool in_theta_pm(const PMat& A, int n);

HypLC h_elem(const PMat& A, const PVec& lam);
HypLC h_unit(int n);
std::string hkey_str(const HKey& k);

// transpose anti-automorphism on basis elements (index transposed, weight kept)
HypLC h_transpose(const HypLC& x, const Ring& ring);

// (k E_{i,j})<0> . A<lam> as an exact finite sum; i may be any integer
// (normalized by periodicity), j != i. Index matrices that would acquire a
// negative off entry are dropped.
HypLC h_gen_mul(long long k, long long i, long long j, const PMat& A,
                const PVec& lam, const Ring& ring);

// (H over mu) . x, termwise by the closed H-binomial action
HypLC hmul(const PVec& mu, const HypLC& x, const Ring& ring);

// the five bases handled by convert: B  weighted elements A<lam>;
// M  monomials E-chain (H|lam) F-chain of one-entry generator braces;
// Bp products A<0>(H|lam); C  products (upper part)<0>(H|lam)(lower part)<0>;
// G  products whose same-residue factors are partition sums over their ray
enum class HBasis { B, M, Bp, C, G };
const char* hbasis_code(HBasis b);
HBasis hbasis_from_code(const std::string& s);

// sum over partitions (k_1 >= k_2 >= ...) of k of the one-row element
// (sum_s E_{i, i + k_s * l * n})<0>; the closed integral form of the
// degree-k imaginary ray element on row i with ray step l*n
HypLC ray_partition_sum(int n, long long k, long long i, long long l);
std::vector<std::vector<long long>> partitions_of(long long k);

// Products and basis conversions with memoized generator-chain caches; all
// caches live in the engine, so one engine per task is concurrency-safe.
struct HyperEngine {
  Ring ring;

  explicit HyperEngine(const Ring& rg) : ring(rg) {}

  // general product: the left factor is rewritten in monomial coordinates,
  // then each monomial is applied to y as a chain of generator and
  // H-binomial steps
  HypLC mul(const HypLC& x, const HypLC& y);

  // coordinates of x in the monomial basis (x given in the weighted basis)
  HypLC to_monomial_coords(const HypLC& x);

  // expansion of one `from`-basis element in the weighted basis
  HypLC expand(HBasis from, const HKey& key);

  // exact unitriangular change of basis
  HypLC convert(const HypLC& x, HBasis from, HBasis to);

  // positive part: left multiplication by the chain element of an
  // upper-strict index (and the mirrored lower-part variant)
  HypLC hall_mul_elem(const PMat& A, const HypLC& y);
  HypLC hall_mul(const PMat& A, const PMat& B);
  HypLC lower_product(const std::vector<HypLC>& factors);
  HypLC upper_product(const std::vector<HypLC>& factors);

 private:
  std::map<HKey, HypLC, HOrder> mcorr_;
  std::map<PMat, HypLC> hallcorr_;
  std::map<std::tuple<long long, long long, long long>,
           std::map<HKey, HypLC, HOrder>>
      gencache_;

  HypLC gen_apply(long long k, long long i, long long j, const HypLC& y);
  HypLC monomial_chain(const HKey& key, const HypLC& y);
  const HypLC& mcorrections(const HKey& key);
  const HypLC& hall_corrections(const PMat& A);
  HypLC hall_chain(const PMat& A, const HypLC& y);
  HypLC xfactor(int n, long long i, long long j, long long a);
};

// generator case of the positive-part product law: (k E_{i,j})<0> . A<0>
// for upper-strict A and i < j; all terms keep total off weight
HypLC hall_gen_mul(long long k, long long i, long long j, const PMat& A,
                   const Ring& ring);

// degree-r evaluation: A<lam> -> the weighted diagonal sum at degree r
MatLC evaluate_xi(const HypLC& x, long long r, const Ring& ring);

// checks (E_{i,j})^k / k! == (k E_{i,j})<0> over the rationals; requires
// distinct residues, where the identity holds
bool divided_power_check(int n, long long i, long long j, long long k);

}  // namespace afs
