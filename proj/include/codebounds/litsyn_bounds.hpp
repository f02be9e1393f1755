#ifndef CODEBOUNDS_LITSYN_BOUNDS_HPP
#define CODEBOUNDS_LITSYN_BOUNDS_HPP

#include <vector>

#include "codebounds/aq_oracle.hpp"
#include "codebounds/params.hpp"

namespace codebounds {

// How the ball-size ratio delta = |B(r,n-k)| / |B(d-2r-1,n-k)| enters the
// inequality. Floor keeps the integer part only (the reading under which the
// delta = 0 statistics make sense); Exact keeps the full rational, which
// tightens the inequality and can only shrink the admissible k.
enum class DeltaMode { Floor, Exact };

// Puncturing parameters of the Litsyn-Laihonen family: delete t coordinates,
// collect words within distance r of a chosen prefix.
struct PuncturingParams {
    unsigned t;
    unsigned r;
};

/// Throws unless t <= n-d, r <= t, 2r <= d and d-2r <= n-t.
void validate_puncturing(const CodeParams& p, const PuncturingParams& pp);

// Upper bound on any (n,d)-code whose words all have weight >= d+epsilon:
//   floor( A_q(n,d) - |B(epsilon,n)| / |B(d-1,n)| ),
// evaluated with exact rational subtraction. Requires epsilon >= 1 and
// d + epsilon <= n.
Nat restricted_code_bound(const CodeParams& p, unsigned epsilon, const AqSource& aq);

/// floor( q^t * A_q(n-t, d-2r) / |B(r,t)| ).
Nat litsyn_laihonen(const CodeParams& p, const PuncturingParams& pp, const AqSource& aq);

struct BoundAResult {
    Nat value;
    // set when the inner parenthesis went negative and the result was
    // clamped to zero
    bool inner_clamped = false;
};

// The sharpened puncturing bound
//   floor( q^t / |B(r,t)| * ( A_q(n-t,d-2r) - delta' + 1 ) ),
// delta' = |B(r,n-t)| / |B(d-2r-1,n-t)| under the given DeltaMode. Valid for
// maximal systematic-embedding codes with t <= floor(log_q |C|); the caller
// owns that hypothesis.
BoundAResult bound_a(const CodeParams& p, const PuncturingParams& pp, const AqSource& aq,
                     DeltaMode mode = DeltaMode::Floor);

struct BoundBCheck {
    unsigned r;
    Nat lhs;    // |B(r,k)|
    Nat rhs;    // A_q(n-k,d-2r) - delta + 1 (integer form)
    Nat delta;  // effective integer delta subtracted
    BoundSource inner_source;
    bool inner_plotkin_used;
};

struct BoundBWitness {
    unsigned k = 0;
    std::vector<BoundBCheck> checks;  // the checks at the accepted k
    // true when every check that rejected a larger k did so with delta = 0,
    // i.e. the weak variant would have settled on the same k
    bool rejections_delta_zero = true;
    // true when any inner estimate consulted during the scan used Plotkin
    bool plotkin_used = false;
};

// Largest k in [1, n-d+1] such that every admissible r
// (0 <= r <= min(floor((d-1)/2), k) with d-2r <= n-k) satisfies
//   |B(r,k)| <= A_q(n-k, d-2r) - delta + 1.
// Scans k from n-d+1 downward and returns the first k that passes, together
// with its per-r audit trail. Inadmissible r values are skipped. For the
// degenerate n <= d the result is k = max(n-d+1, 1) with no checks.
BoundBWitness bound_b_max_k(const CodeParams& p, const AqSource& aq,
                            DeltaMode mode = DeltaMode::Floor);

/// Every k in [1, n-d+1] that passes the Bound-B checks (for monotonicity audits).
std::vector<unsigned> bound_b_admissible_ks(const CodeParams& p, const AqSource& aq,
                                            DeltaMode mode = DeltaMode::Floor);

/// Same search with the delta term dropped: |B(r,k)| <= A_q(n-k,d-2r) + 1.
unsigned weak_bound_b_max_k(const CodeParams& p, const AqSource& aq);

// Closed form of the d = 3 case: the largest k with q^(n-k) >= (q-1)n + 1.
// Requires n >= 3.
unsigned d3_closed_form(unsigned q, unsigned n);

}  // namespace codebounds

#endif
