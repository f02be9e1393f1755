#ifndef CODEBOUNDS_CLASSICAL_BOUNDS_HPP
#define CODEBOUNDS_CLASSICAL_BOUNDS_HPP

#include <optional>

#include "codebounds/combinatorics.hpp"
#include "codebounds/params.hpp"

namespace codebounds {

/// q^(n-d+1).
Nat singleton_bound(const CodeParams& p);

/// floor(q^n / |B(floor((d-1)/2), n)|).
Nat hamming_bound(const CodeParams& p);

// floor(q*d / (q*d - n*(q-1))) when q*d > n*(q-1); inapplicable otherwise.
// Inapplicability is a value, not an error.
std::optional<Nat> plotkin_bound(const CodeParams& p);

/// Largest k >= 0 with n >= sum_{i=0}^{k-1} ceil(d / q^i).
unsigned griesmer_max_k(const CodeParams& p);

// Upper bound on the size of a q-ary constant-weight-w code of length n and
// minimum distance d, by the iterated floor recursion
//   A(n,d,w) <= floor(n(q-1)/w * A(n-1,d,w-1)),
// grounded at A(.,d,w') = 1 once 2w' < d.
Nat constant_weight_upper(unsigned n, unsigned d, unsigned w, unsigned q);

// Johnson-type sharpening of the sphere-packing bound, with t = floor((d-1)/2):
//   A_q(n,d) <= q^n / ( |B(t,n)| + (C(n,t+1)(q-1)^{t+1} - [d odd] C(d,t) A(n,d,d)) / A(n,d,t+1) )
// where the constant-weight terms use constant_weight_upper and the numerator
// correction is clamped at zero. Always <= hamming_bound.
Nat johnson_bound(const CodeParams& p);

// Elias-Bassalygo bound: with theta = 1 - 1/q, the minimum over integers w,
// 1 <= w <= theta*n with w^2 - 2*theta*n*w + theta*n*d > 0, of
//   floor( theta*n*d / (w^2 - 2*theta*n*w + theta*n*d) * q^n / |B(w,n)| ),
// evaluated in exact integer arithmetic; q^n when no w is admissible.
Nat elias_bassalygo_bound(const CodeParams& p);

/// Dimension form floor(log_q(size_bound)) used by the comparison tables.
unsigned k_form(const Nat& size_bound, unsigned q);

}  // namespace codebounds

#endif
