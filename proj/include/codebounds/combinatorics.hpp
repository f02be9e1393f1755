#ifndef CODEBOUNDS_COMBINATORICS_HPP
#define CODEBOUNDS_COMBINATORICS_HPP

#include <vector>

#include "codebounds/nat.hpp"

namespace codebounds {

/// C(m, j); zero when j > m.
Nat binomial(unsigned m, unsigned j);

/// q^e as a Nat.
Nat pow_u(unsigned base, unsigned exp);

// Number of vectors of F_q^m within Hamming distance l of a fixed center:
// sum_{j=0}^{l} C(m,j) (q-1)^j. A radius beyond m covers the whole space,
// so l is clamped to m.
Nat ball_size(unsigned l, unsigned m, unsigned q);

/// Ball sizes for radii 0..max_l at fixed (m, q); entry [l] = ball_size(l, m, q).
std::vector<Nat> ball_sizes_upto(unsigned max_l, unsigned m, unsigned q);

/// Largest s >= 0 with q^s <= x. Requires x >= 1 and q >= 2.
unsigned floor_log_q(const Nat& x, unsigned q);

}  // namespace codebounds

#endif
