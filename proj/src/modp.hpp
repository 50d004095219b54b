#pragma once
// Base change to characteristic p: reduction of exact elements, the
// level-h subalgebras cut out by entry bounds < p^h with their bases,
// degreewise quotient maps, windowed bases of the little and infinitesimal
// finite-rank algebras, and an exact linear-independence harness.
#include "garland.hpp"
#include "hyper.hpp"

namespace afs {

struct ModPContext {
  long long p;
  int h;
  long long q;  // p^h

  ModPContext(long long p_, int h_);
};

// coefficients reduced to [0, p); zero terms dropped
HypLC reduce(const HypLC& x, long long p);
MatLC reduce(const MatLC& x, long long p);

// x given in brace coordinates: every off-diagonal entry and every weight
// component must lie below p^h
bool membership_h(const HypLC& x, const ModPContext& ctx);

// the four level-h bases plus the zero part; elements over F_p.
// Window: each row i carries the column slots j in (i-W, i+W] \ {i}.
enum class ModBasis { Bh, Mh, Ch, Gh, Mh0 };
std::vector<std::pair<HKey, HypLC>> enumerate_basis(ModBasis kind, int n,
                                                    const ModPContext& ctx,
                                                    long long W,
                                                    HyperEngine& eng);

// degree-r quotient map over F_p (termwise brace evaluation, reduced)
MatLC xi_rk(const HypLC& x, long long r, long long p);

// windowed bases of the little (class-symbol) and infinitesimal algebras
// at degree r; the paired key records the indexing symbol: (A, residue
// vector) for Phr/Mhr, (A, weight) for Bhr/PPhr/MPhr. Window: |j-i| <= W.
enum class LittleBasis { Phr, Mhr, Bhr, PPhr, MPhr };
std::vector<std::pair<HKey, MatLC>> little_inf_basis(LittleBasis kind, int n,
                                                     long long r,
                                                     const ModPContext& ctx,
                                                     long long W);

// exact coordinates of a degree-r element on the residue-class symbols:
// terms [A + diag(mu)] grouped by (off part, mu mod p^h); every class must
// be uniformly weighted across its compositions, else internal_error
HypLC class_coords(const MatLC& x, int n, long long r, const ModPContext& ctx);

// stacks the degree-r evaluations for r up to max sigma(A)+|lam| and tests
// full column rank over F_p (distinct brace keys are provably independent)
bool independence_check(const std::vector<HKey>& family, int n,
                        const ModPContext& ctx);

}  // namespace afs
