#pragma once

// Total multiplication on reduced words.
//
// A reduced word splits into an optional type I prefix a^i b^m and an
// optional type II suffix a^n b^j. Three primitive products cover every
// combination:
//
//   I * I    (i,m)(i',m') = (i, m+m'-i')
//   II * II  (n,j)(n',j') = (n+n'-j, j')
//   II * I   with d1 = m'-i', d2 = n-j:
//              d1 > d2  ->  prefix (1, d1-d2+1)
//              d1 <= d2 ->  suffix (d2-d1+1, 1)   (improper ab when d1 = d2)
//
// Each primitive is followed by at most one rewrite when a parameter bound
// is exceeded: a b^(mu+1) = b^mu turns prefix (1,M) with M > mu into
// (0, M-1), and a^(nu+1) b = a^nu turns suffix (N,1) with N > nu into
// (N-1, 0). One application removes the bounded marker (i resp. j drops to
// 0), so no fixed-point loop is needed.
//
// The general product x y folds the middle product suffix(x) * prefix(y)
// into the outer parts; a surviving improper suffix ab is dropped against a
// type I left factor.

#include <cstdint>
#include <vector>

#include "core.hpp"

namespace orthomon {

ReducedWord multiply(const ReducedWord& x, const ReducedWord& y,
                     const Params& p);

// Left-fold of multiply over the word's letters (batched per run).
ReducedWord reduce_word(const FreeWord& w, const Params& p);

// x^k, k >= 1.
ReducedWord power(const ReducedWord& x, std::uint64_t k, const Params& p);

bool is_idempotent(const ReducedWord& x, const Params& p);

// Natural order restricted to idempotents: e <= f iff ef = fe = e.
// Raises NonIdempotent unless both arguments are idempotent.
bool natural_le(const ReducedWord& e, const ReducedWord& f, const Params& p);

// xyx = x and yxy = y.
bool is_inverse_pair(const ReducedWord& x, const ReducedWord& y,
                     const Params& p);

// All inverses of x with every exponent <= cap, in (i,m,n,j) order. A
// truncation of V_S(x); no completeness claim.
std::vector<ReducedWord> inverses_within(const ReducedWord& x,
                                         const Params& p, std::uint64_t cap);

// 1 for idempotents, infinity otherwise (the semigroups are combinatorial
// and every non-idempotent has infinite order).
ExtNat order_of(const ReducedWord& x, const Params& p);

}  // namespace orthomon
