#include "codebounds/litsyn_bounds.hpp"

#include "codebounds/combinatorics.hpp"

namespace codebounds {

namespace {

// Inner estimates may be asked for distance d-2r = 0 (even d with r = d/2).
// Any code has distance >= 1, so A_q(m,0) = A_q(m,1) = q^m.
CodeParams inner_params(unsigned q, unsigned m, unsigned d) {
    return CodeParams(q, m, d == 0 ? 1 : d);
}

}  // namespace

void validate_puncturing(const CodeParams& p, const PuncturingParams& pp) {
    if (pp.t > p.n - p.d)
        throw std::invalid_argument("puncturing: t must satisfy t <= n-d");
    if (pp.r > pp.t) throw std::invalid_argument("puncturing: r must satisfy r <= t");
    if (2 * pp.r > p.d) throw std::invalid_argument("puncturing: r must satisfy 2r <= d");
    if (p.d >= 2 * pp.r && p.d - 2 * pp.r > p.n - pp.t)
        throw std::invalid_argument("puncturing: need d-2r <= n-t");
}

Nat restricted_code_bound(const CodeParams& p, unsigned epsilon, const AqSource& aq) {
    if (epsilon < 1) throw std::invalid_argument("restricted_code_bound: epsilon must be >= 1");
    if (p.d + epsilon > p.n)
        throw std::invalid_argument("restricted_code_bound: need d + epsilon <= n");
    Nat a = aq.aq_upper(p).value;
    Nat num = ball_size(epsilon, p.n, p.q);
    Nat den = ball_size(p.d - 1, p.n, p.q);
    // floor(a - num/den) = floor((a*den - num) / den)
    auto diff = Nat::checked_sub(a * den, num);
    if (!diff) return Nat();
    return Nat::div_floor(*diff, den);
}

Nat litsyn_laihonen(const CodeParams& p, const PuncturingParams& pp, const AqSource& aq) {
    validate_puncturing(p, pp);
    Nat inner = aq.aq_upper(inner_params(p.q, p.n - pp.t, p.d - 2 * pp.r)).value;
    return Nat::div_floor(pow_u(p.q, pp.t) * inner, ball_size(pp.r, pp.t, p.q));
}

BoundAResult bound_a(const CodeParams& p, const PuncturingParams& pp, const AqSource& aq,
                     DeltaMode mode) {
    validate_puncturing(p, pp);
    unsigned m = p.n - pp.t;           // remaining length
    unsigned d_in = p.d - 2 * pp.r;    // inner distance
    Nat inner = aq.aq_upper(inner_params(p.q, m, d_in)).value;
    Nat qt = pow_u(p.q, pp.t);
    Nat ball_rt = ball_size(pp.r, pp.t, p.q);

    Nat delta_num = ball_size(pp.r, m, p.q);
    Nat delta_den = ball_size(d_in == 0 ? 0 : d_in - 1, m, p.q);

    if (mode == DeltaMode::Floor) {
        Nat delta = Nat::div_floor(delta_num, delta_den);
        auto paren = Nat::checked_sub(inner + Nat(1ul), delta);
        if (!paren) return {Nat(), true};
        return {Nat::div_floor(qt * *paren, ball_rt), false};
    }
    // exact: floor( q^t * ((inner+1)*den - num) / (ball_rt * den) )
    auto scaled = Nat::checked_sub((inner + Nat(1ul)) * delta_den, delta_num);
    if (!scaled) return {Nat(), true};
    return {Nat::div_floor(qt * *scaled, ball_rt * delta_den), false};
}

namespace {

struct CheckOutcome {
    bool pass;
    BoundBCheck check;
};

// One Bound-B inequality at (k, r): |B(r,k)| <= A_q(n-k,d-2r) - delta + 1.
// In Exact mode the rational delta is folded in through its ceiling, which is
// equivalent for integer left-hand sides.
CheckOutcome bound_b_check(const CodeParams& p, unsigned k, unsigned r, const AqSource& aq,
                           DeltaMode mode, bool drop_delta) {
    unsigned m = p.n - k;
    unsigned d_in = p.d - 2 * r;
    AqEstimate inner = aq.aq_upper(CodeParams(p.q, m, d_in));
    Nat delta;
    if (!drop_delta) {
        Nat num = ball_size(r, m, p.q);
        Nat den = ball_size(d_in - 1, m, p.q);
        delta = mode == DeltaMode::Floor ? Nat::div_floor(num, den) : Nat::div_ceil(num, den);
    }
    Nat lhs = ball_size(r, k, p.q);
    Nat rhs = Nat::saturating_sub(inner.value + Nat(1ul), delta);
    bool pass = lhs <= rhs;
    return {pass, {r, std::move(lhs), std::move(rhs), std::move(delta), inner.source,
                   inner.plotkin_used}};
}

bool bound_b_k_passes(const CodeParams& p, unsigned k, const AqSource& aq, DeltaMode mode,
                      bool drop_delta, std::vector<BoundBCheck>* trail,
                      BoundBWitness* scan_flags = nullptr) {
    unsigned r_max = std::min((p.d - 1) / 2, k);
    bool all_pass = true;
    for (unsigned r = 0; r <= r_max; ++r) {
        if (p.d - 2 * r > p.n - k) continue;  // hypothesis does not apply
        CheckOutcome outcome = bound_b_check(p, k, r, aq, mode, drop_delta);
        if (scan_flags && outcome.check.inner_plotkin_used) scan_flags->plotkin_used = true;
        if (!outcome.pass) {
            if (scan_flags && !outcome.check.delta.is_zero())
                scan_flags->rejections_delta_zero = false;
            all_pass = false;
            if (trail) trail->push_back(std::move(outcome.check));
            break;
        }
        if (trail) trail->push_back(std::move(outcome.check));
    }
    return all_pass;
}

BoundBWitness bound_b_search(const CodeParams& p, const AqSource& aq, DeltaMode mode,
                             bool drop_delta) {
    BoundBWitness witness;
    if (p.n <= p.d) {
        witness.k = 1;  // d = n admits only k = 1
        return witness;
    }
    for (unsigned k = p.n - p.d + 1; k >= 1; --k) {
        std::vector<BoundBCheck> trail;
        if (bound_b_k_passes(p, k, aq, mode, drop_delta, &trail, &witness)) {
            witness.k = k;
            witness.checks = std::move(trail);
            return witness;
        }
    }
    witness.k = 0;  // unreachable for valid inputs: k = 1 always passes
    return witness;
}

}  // namespace

BoundBWitness bound_b_max_k(const CodeParams& p, const AqSource& aq, DeltaMode mode) {
    if (p.d < 2) throw std::invalid_argument("bound_b_max_k: requires d >= 2");
    return bound_b_search(p, aq, mode, false);
}

std::vector<unsigned> bound_b_admissible_ks(const CodeParams& p, const AqSource& aq,
                                            DeltaMode mode) {
    if (p.d < 2) throw std::invalid_argument("bound_b_admissible_ks: requires d >= 2");
    std::vector<unsigned> out;
    if (p.n <= p.d) return out;
    for (unsigned k = 1; k <= p.n - p.d + 1; ++k)
        if (bound_b_k_passes(p, k, aq, mode, false, nullptr)) out.push_back(k);
    return out;
}

unsigned weak_bound_b_max_k(const CodeParams& p, const AqSource& aq) {
    if (p.d < 2) throw std::invalid_argument("weak_bound_b_max_k: requires d >= 2");
    return bound_b_search(p, aq, DeltaMode::Floor, true).k;
}

unsigned d3_closed_form(unsigned q, unsigned n) {
    if (n < 3) throw std::invalid_argument("d3_closed_form: requires n >= 3");
    // smallest m with q^m >= (q-1)n + 1, then k = n - m
    Nat target(static_cast<unsigned long>(q - 1) * n + 1);
    unsigned m = 0;
    Nat p(1ul);
    while (p < target) {
        ++m;
        p *= Nat(q);
    }
    return n - m;
}

}  // namespace codebounds
