// Stabilized convolution algebra: periodic matrices with nonnegative
// off-diagonal entries and unrestricted integer diagonals.  Provides the
// generator-chain product, the level subalgebras (off-diagonal entries
// bounded by a prime power), the diagonal-shift endomorphisms, the residue
// quotient with diagonals taken mod p^h, and the realization maps that
// identify the level subalgebra of the divided-power loop algebra with the
// quotient and embed it into periodic-class symbols.
#pragma once

#include "modp.hpp"

namespace afs {

// ---------------------------------------------------------------------------
// products with unrestricted diagonals

// left multiplication by [k E_{i,j} + diag(ro(A) - k eps_j)].  Same
// coefficient law as the finite-rank generator action, but diagonal entries
// may be negative: terms whose coefficient involves a vanishing generalized
// binomial drop out on their own.
MatLC k_gen_mul(long long k, long long i, long long j, const PMat& A,
                const Ring& ring);

// truncation onto the finite convolution algebra of rank r: terms whose
// index has a negative diagonal entry (or the wrong total) are dropped
MatLC k_truncate(const MatLC& x, long long r);

// bilinear product; every index must lie in the stabilized family (all
// off-diagonal entries nonnegative).  Defined by rewriting the left factor
// through generator chains with recursive lower-weight corrections.
MatLC k_mul(const MatLC& x, const MatLC& y, Engine& eng);

// all indices in the stabilized family with off-diagonal entries < p^h
bool in_level(const MatLC& x, const ModPContext& ctx);

// diagonal shift [A] -> [A + p^h diag(lam)]; an injective algebra
// endomorphism of the level subalgebra over F_p (over Z it is only an
// index shift, not multiplicative).  Requires in_level(x).
MatLC tau(const PVec& lam, const MatLC& x, const ModPContext& ctx);

// ---------------------------------------------------------------------------
// residue quotient: diagonals mod p^h, coefficients mod p

// coordinates: (zero-diagonal matrix with off entries in [0, p^h), residue
// vector with entries in [0, p^h)).  Same key shape as the divided-power
// basis indices, reused directly.
using KBarLC = HypLC;

// single quotient basis element; residues are normalized mod p^h
KBarLC kbar_elem(const PMat& offpart, const PVec& residues,
                 const ModPContext& ctx);

// project a level element termwise onto quotient coordinates
KBarLC kbar_project(const MatLC& x, const ModPContext& ctx);

// quotient product: zero when the column/row profiles disagree mod p^h;
// otherwise lift both factors to matching integer diagonals, multiply in
// the stabilized algebra, and project.  `lift_shift` moves the chosen
// representative diagonals by that many multiples of p^h (the result is
// independent of the choice; nonzero shifts are used to exercise that).
KBarLC kbar_mul_with_lift(const KBarLC& x, const KBarLC& y,
                          const ModPContext& ctx, long long lift_shift);
KBarLC kbar_mul(const KBarLC& x, const KBarLC& y, const ModPContext& ctx);

// realization map on the level subalgebra of the divided-power form:
// A<lam> -> sum over residue vectors mu of binom(mu, lam) [A + diag(mu)].
// Requires membership_h(x); unitriangular on basis elements.
KBarLC phi_h(const HypLC& x, const ModPContext& ctx);

// ---------------------------------------------------------------------------
// periodic-class symbols in the completion

// coordinates on class symbols [[A + diag(res)]], each denoting the (never
// materialized) sum over all integer diagonals congruent to res mod p^h
using KHatLC = HypLC;

// relabel quotient coordinates as class symbols (injective on the basis)
KHatLC psi_h(const KBarLC& x);

// product of class symbols: pick one profile-compatible representative per
// class, multiply in the stabilized algebra, re-bundle by residue class.
// Uses deliberately shifted representatives, so agreement with kbar_mul is
// a genuine lift-independence statement.
KHatLC khat_mul(const KHatLC& x, const KHatLC& y, const ModPContext& ctx);

// check that direct class-bundling of the infinite-diagonal expansion of x
// (computed with representatives outside [0, p^h)) agrees with the
// composite of phi_h and psi_h.  Requires membership_h(x).
bool zeta_consistency(const HypLC& x, const ModPContext& ctx);

}  // namespace afs
