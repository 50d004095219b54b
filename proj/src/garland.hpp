#pragma once
// Imaginary-ray elements: a polynomial algebra with the raising derivation,
// the degree-k elements defined by their recursion, the evaluation
// homomorphisms onto single rows of the loop algebra, and the closed
// partition form that identifies the two integral structures.
#include "hyper.hpp"

namespace afs {

// monomial: multiset of indices m >= 1 stored sorted ascending; empty = 1
using GMono = std::vector<long long>;
using GPoly = LinComb<GMono>;

GPoly g_const(const Rat& c);
GPoly g_x(long long m);
GPoly g_mul(const GPoly& a, const GPoly& b);
// the derivation sending X_m to m X_{m+1}
GPoly g_dplus(const GPoly& a);
// total weight of a monomial, where X_m has weight m
long long mono_weight(const GMono& m);
std::string gpoly_str(const GPoly& f);

// degree-k element: 1 for k=0, and k L_k = sum_{0<=s<k} L_s X_{k-s}
GPoly lambda_poly(long long k);

// evaluation homomorphism on row i with ray step l*n: X_m -> the one-entry
// element at (i, i+m*l*n); monomials become positive-part (or mirrored)
// products, coefficients carried exactly
HypLC psi(int n, long long i, long long l, const GPoly& f, HyperEngine& eng);

// sum over partitions of k of the one-row elements (closed integral form)
HypLC partition_rhs(int n, long long k, long long i, long long l);

// counts of each part size: part s occurs count_of_parts(parts)[s] times
std::map<long long, long long> count_of_parts(const std::vector<long long>& parts);
// the one-row element indexed by part counts: sum_s b_s E_{i, i+s*l*n}
HypLC counts_elem(int n, const std::map<long long, long long>& counts,
                  long long i, long long l);

// product of the mixed factors of A in the fixed order (upper factors first,
// then lower), same-residue factors expanded by their partition sums
HypLC garland_monomial(const PMat& A, HyperEngine& eng);

}  // namespace afs
