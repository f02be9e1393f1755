#ifndef CODEBOUNDS_PARAMS_HPP
#define CODEBOUNDS_PARAMS_HPP

#include <stdexcept>
#include <string>

#include "codebounds/nat.hpp"

namespace codebounds {

// A validated (q, n, d) triple. q is any integer >= 2; the bound formulas
// are purely combinatorial and do not require a prime power.
struct CodeParams {
    unsigned q;
    unsigned n;
    unsigned d;

    CodeParams(unsigned q_, unsigned n_, unsigned d_) : q(q_), n(n_), d(d_) {
        if (q < 2) throw std::invalid_argument("CodeParams: q must be >= 2");
        if (n < 1) throw std::invalid_argument("CodeParams: n must be >= 1");
        if (d < 1 || d > n) throw std::invalid_argument("CodeParams: need 1 <= d <= n");
    }
};

enum class BoundSource {
    Singleton,
    Hamming,
    Plotkin,
    Griesmer,
    Johnson,
    Elias,
    Known,
    Trivial,
    BoundA,
    BoundB,
    LitsynLaihonen,
};

const char* to_string(BoundSource s);

/// An exact upper bound on code size, tagged with the bound that produced it.
struct BoundValue {
    Nat size_bound;
    BoundSource source;
};

// Best available upper bound on A_q(n,d). plotkin_used records whether the
// Plotkin bound was applicable and attained the minimum, independently of
// which source tag won a tie.
struct AqEstimate {
    Nat value;
    BoundSource source;
    bool plotkin_used = false;
};

}  // namespace codebounds

#endif
