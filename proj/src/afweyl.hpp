#pragma once
// Extended affine symmetric group: window-notation permutations, Young
// subgroups and their coset combinatorics, the bijection between double
// cosets and periodic matrices, and the convolution oracle for standard
// basis products.
#include <tuple>
#include <unordered_map>
#include <vector>

#include "lincomb.hpp"
#include "periodic.hpp"

namespace afs {

// w: Z -> Z with w(i+r) = w(i)+r, stored by its window (w(1),...,w(r)).
struct APerm {
  int r = 0;
  std::vector<long long> w;

  APerm() = default;
  APerm(int r_, std::vector<long long> w_) : r(r_), w(std::move(w_)) {}
  static APerm identity(int r);

  long long at(long long i) const {
    long long i0 = mod_ll(i - 1, r);  // 0-based window index
    return w[i0] + (i - 1 - i0);
  }
  bool valid() const;  // window residues mod r are a complete system
  APerm compose(const APerm& o) const;  // (this o other)(i) = this(other(i))
  APerm inverse() const;

  bool operator==(const APerm& o) const { return r == o.r && w == o.w; }
  auto operator<=>(const APerm& o) const = default;
};

struct APermHash {
  size_t operator()(const APerm& p) const {
    size_t h = 1469598103934665603ull;
    for (long long x : p.w) {
      h ^= size_t(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Young composition blocks for lambda in Lambda(n,r): the window positions
// 1..r are partitioned into consecutive blocks of sizes lambda_1..lambda_n,
// extended r-periodically.
struct Blocks {
  PVec lam;
  long long r = 0;
  std::vector<long long> pref;        // pref[i] = lambda_1+..+lambda_i, size n+1
  std::vector<int> block_of_window;   // size r, 1..n

  Blocks() = default;
  explicit Blocks(const PVec& lam_);
  // block index (any integer) of an arbitrary integer position
  long long block_of(long long pos) const {
    long long p0 = mod_ll(pos - 1, r);  // 0-based within window
    return block_of_window[p0] + ((pos - 1 - p0) / r) * lam.n;
  }
  // start of window block i (1..n): positions pref[i-1]+1 .. pref[i]
};

// adjacent-transposition generators of the finite Young subgroup S_lambda
std::vector<APerm> young_generators(const PVec& lam);
// all elements of S_lambda (finite; product of per-block symmetric groups)
std::vector<APerm> young_elements(const PVec& lam);

// d increasing on every window block of lambda
bool is_minimal_rep(const APerm& d, const PVec& lam);

// block intersection matrix a_{k,l} = |R_k^lam ∩ w R_l^mu|; defined for any
// w and constant on S_lam w S_mu double cosets
PMat blockmat(const PVec& lam, const APerm& w, const PVec& mu);

// requires d minimal on both sides (checked); returns blockmat
PMat jmath(const PVec& lam, const APerm& d, const PVec& mu);

// inverse of jmath by the canonical order-preserving filling; returns
// (lam, d, mu) with d the minimal double coset representative
std::tuple<PVec, APerm, PVec> jmath_inverse(const PMat& A);

// canonical representative of the coset S_lam . w  (values within each
// lambda-block sorted ascending onto ascending positions)
APerm canonical_left(const APerm& w, const Blocks& lam);
// canonical representative of w . S_mu (values at each mu-block of window
// positions sorted ascending)
APerm canonical_right(const APerm& w, const Blocks& mu);

// transversal {x} with S_lam d S_mu = disjoint union of S_lam x
std::vector<APerm> left_transversal(const PVec& lam, const APerm& d, const PVec& mu);

// the full (finite) double coset S_lam d S_mu by closure
std::vector<APerm> double_coset(const PVec& lam, const APerm& d, const PVec& mu);

// the generator coset representative for [kE_{h,j} + diag(lam - k eps_j)]
APerm generator_rep(const PVec& lam, int h, long long j, long long k);

using MatLC = LinComb<PMat>;

// [B]_1 [A]_1 by convolution of coset sums; exact integer coefficients
MatLC oracle_mul(const PMat& B, const PMat& A);

// reference implementation enumerating whole double cosets and asserting
// coefficient uniformity across each one; used to validate oracle_mul
MatLC oracle_mul_naive(const PMat& B, const PMat& A);

// prod_i lambda_i!  (order of the Young subgroup)
Int young_size(const PVec& lam);

// Cached decompositions for bulk verification runs: caller caches the
// right-factor transversal xs per right factor; the left-factor transversal
// is cached here per (lam,h,j,k) generator key.
struct OracleCache {
  std::unordered_map<std::string, std::vector<APerm>> left;
  MatLC gen_mul(const PVec& lam, int h, long long j, long long k,
                const std::vector<APerm>& xs, const Blocks& lamp_blocks,
                const Blocks& mu_blocks);
};

}  // namespace afs
