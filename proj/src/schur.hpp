#pragma once
// Bounded endomorphism algebra on periodic matrices: closed-form generator
// products, a triangular rewrite engine for general products (shared with
// the stabilized variant, which admits arbitrary integer diagonals), and
// the named families of basis-element sums.
#include "afweyl.hpp"

namespace afs {

// NonNegative: indices stay in Theta (all entries >= 0, the bounded algebra).
// AnyDiagonal: off-diagonal entries >= 0, diagonal unrestricted.
enum class GenMode { NonNegative, AnyDiagonal };

bool in_theta(const PMat& A, int n, long long r);
// off-diagonal entries >= 0; diagonal arbitrary
bool in_theta_tilde(const PMat& A, int n);

// [k E_{i,j} + diag(ro(A) - k eps_j)] . [A] as an exact finite sum.
// i may be any integer (normalized by periodicity); j != i. In NonNegative
// mode requires A in Theta and ro(A)_j >= k; result indices stay in Theta.
MatLC gen_mul(long long k, long long i, long long j, const PMat& A,
              GenMode mode, const Ring& ring);

// Triangular rewrite engine: expresses a basis index as its generator chain
// applied to a diagonal, memoizing the strictly-lower correction terms, and
// multiplies arbitrary elements by chain application + back-substitution.
struct Engine {
  GenMode mode;
  Ring ring;
  std::map<PMat, MatLC> corr;

  Engine(GenMode m, const Ring& rg) : mode(m), ring(rg) {}

  // the generator-chain element of B applied to y (left to right over the
  // off entries of B in (i,j)-lexicographic order)
  MatLC chain_apply(const PMat& B, const MatLC& y);
  // chain(B) - [B]; every term has strictly smaller off-diagonal weight
  const MatLC& corrections(const PMat& B);
  MatLC mul_basis(const PMat& B, const MatLC& y);
  MatLC mul(const MatLC& x, const MatLC& y);
};

// pairwise convolution products (verification path; NonNegative indices only)
MatLC mul_by_oracle(const MatLC& x, const MatLC& y, const Ring& ring);

// sum over mu in Lambda(n, r - sigma(A)) of  mu^jexp [A + diag(mu)]
MatLC elem_bracket(const PMat& A, const PVec& jexp, long long r, const Ring& ring);
// sum of (mu choose lam) [A + diag(mu)]; zero if A has a negative off entry
MatLC elem_brace(const PMat& A, const PVec& lam, long long r, const Ring& ring);
// sum of [A + diag(mu)] over mu with mu mod q == lam_res mod q
MatLC elem_double_bracket(const PMat& A, const PVec& lam_res, long long r,
                          long long q, const Ring& ring);

}  // namespace afs
