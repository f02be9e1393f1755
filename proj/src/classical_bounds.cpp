#include "codebounds/classical_bounds.hpp"

namespace codebounds {

const char* to_string(BoundSource s) {
    switch (s) {
        case BoundSource::Singleton: return "singleton";
        case BoundSource::Hamming: return "hamming";
        case BoundSource::Plotkin: return "plotkin";
        case BoundSource::Griesmer: return "griesmer";
        case BoundSource::Johnson: return "johnson";
        case BoundSource::Elias: return "elias";
        case BoundSource::Known: return "known";
        case BoundSource::Trivial: return "trivial";
        case BoundSource::BoundA: return "boundA";
        case BoundSource::BoundB: return "boundB";
        case BoundSource::LitsynLaihonen: return "litsynLaihonen";
    }
    return "?";
}

Nat singleton_bound(const CodeParams& p) { return pow_u(p.q, p.n - p.d + 1); }

Nat hamming_bound(const CodeParams& p) {
    return Nat::div_floor(pow_u(p.q, p.n), ball_size((p.d - 1) / 2, p.n, p.q));
}

std::optional<Nat> plotkin_bound(const CodeParams& p) {
    // exact form of d > n(1-1/q): q*d > n*(q-1)
    unsigned long qd = static_cast<unsigned long>(p.q) * p.d;
    unsigned long nq1 = static_cast<unsigned long>(p.n) * (p.q - 1);
    if (qd <= nq1) return std::nullopt;
    return Nat(qd / (qd - nq1));
}

unsigned griesmer_max_k(const CodeParams& p) {
    // sum of ceil(d/q^i) grows by at least 1 per term, so k < n + 1 always
    Nat budget(p.n);
    Nat sum;
    Nat q_pow(1ul);
    unsigned k = 0;
    while (true) {
        Nat term = Nat::div_ceil(Nat(p.d), q_pow);
        sum += term;
        if (sum > budget) break;
        ++k;
        q_pow *= Nat(p.q);
    }
    return k;
}

Nat constant_weight_upper(unsigned n, unsigned d, unsigned w, unsigned q) {
    if (w > n) throw std::invalid_argument("constant_weight_upper: w > n");
    if (2 * w < d) return Nat(1ul);
    // innermost weight e-1 satisfies 2(e-1) < d
    unsigned e = (d + 1) / 2;
    Nat r(1ul);
    for (unsigned i = e; i <= w; ++i) {
        r *= Nat(static_cast<unsigned long>(n - w + i) * (q - 1));
        r = Nat::div_floor(r, Nat(i));
    }
    if (q == 2) {
        // binary restricted Johnson bound: within constant weight all
        // distances are even, and floor(en / (w^2 - wn + en)) applies when
        // the denominator is positive
        long long den = static_cast<long long>(w) * w -
                        static_cast<long long>(w) * n + static_cast<long long>(e) * n;
        if (den > 0) {
            Nat quad(static_cast<unsigned long>(e) * n / static_cast<unsigned long>(den));
            if (quad < r) r = quad;
        }
    }
    return r;
}

namespace {

Nat johnson_bound_direct(const CodeParams& p);

}  // namespace

Nat johnson_bound(const CodeParams& p) {
    // Binary codes satisfy A_2(n, 2e) = A_2(n-1, 2e-1), and the textbook
    // evaluates even distances through that identity; it sharpens the direct
    // even-d formula while staying below the Hamming bound.
    if (p.q == 2 && p.d % 2 == 0 && p.d > 2 && p.n > p.d) {
        Nat via_parity = johnson_bound_direct(CodeParams(2, p.n - 1, p.d - 1));
        Nat direct = johnson_bound_direct(p);
        return via_parity < direct ? via_parity : direct;
    }
    return johnson_bound_direct(p);
}

namespace {

Nat johnson_bound_direct(const CodeParams& p) {
    unsigned q = p.q, n = p.n, d = p.d;
    unsigned t = (d - 1) / 2;
    Nat ball = ball_size(t, n, q);
    Nat shell = binomial(n, t + 1) * pow_u(q - 1, t + 1);  // vectors at distance t+1
    Nat corr = shell;
    if (d % 2 == 1) {
        // words at distance exactly d from a codeword can absorb C(d,t) of its
        // distance-(t+1) neighbours each
        corr = Nat::saturating_sub(shell, binomial(d, t) * constant_weight_upper(n, d, d, q));
    }
    Nat a_t1 = constant_weight_upper(n, d, t + 1, q);
    // floor(q^n / (ball + corr / a_t1)) with a single exact division
    Nat denom = ball * a_t1 + corr;
    return Nat::div_floor(pow_u(q, n) * a_t1, denom);
}

}  // namespace

Nat elias_bassalygo_bound(const CodeParams& p) {
    unsigned q = p.q, n = p.n, d = p.d;
    // theta*n*d and the quadratic scaled by q to stay integral
    unsigned long nq1 = static_cast<unsigned long>(n) * (q - 1);
    Nat scaled_tnd(nq1 * d);
    Nat qn = pow_u(q, n);
    Nat numerator = scaled_tnd * qn;

    std::optional<Nat> best;
    Nat ball(1ul);  // |B(w,n)| built incrementally
    mpz_class qm1_pow = 1;
    for (unsigned w = 1; static_cast<unsigned long>(w) * q <= nq1; ++w) {
        qm1_pow *= (q - 1);
        ball += Nat(mpz_class(binomial(n, w).raw() * qm1_pow));
        // q*w^2 - 2n(q-1)w + n(q-1)d > 0
        mpz_class quad = mpz_class(q) * w * w + mpz_class(nq1) * d - 2 * mpz_class(nq1) * w;
        if (sgn(quad) <= 0) continue;
        Nat candidate = Nat::div_floor(numerator, Nat(quad) * ball);
        if (!best || candidate < *best) best = candidate;
    }
    return best ? *best : qn;
}

unsigned k_form(const Nat& size_bound, unsigned q) { return floor_log_q(size_bound, q); }

}  // namespace codebounds
