#include "codebounds/combinatorics.hpp"

#include <stdexcept>

namespace codebounds {

Nat binomial(unsigned m, unsigned j) {
    if (j > m) return Nat();
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), m, j);
    return Nat(r);
}

Nat pow_u(unsigned base, unsigned exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return Nat(r);
}

Nat ball_size(unsigned l, unsigned m, unsigned q) {
    if (q < 2) throw std::invalid_argument("ball_size: alphabet size must be >= 2");
    if (l > m) l = m;
    mpz_class sum = 0;
    mpz_class term;
    mpz_class qm1_pow = 1;  // (q-1)^j
    for (unsigned j = 0; j <= l; ++j) {
        if (j > 0) qm1_pow *= (q - 1);
        mpz_bin_uiui(term.get_mpz_t(), m, j);
        sum += term * qm1_pow;
    }
    return Nat(sum);
}

std::vector<Nat> ball_sizes_upto(unsigned max_l, unsigned m, unsigned q) {
    if (q < 2) throw std::invalid_argument("ball_sizes_upto: alphabet size must be >= 2");
    std::vector<Nat> out;
    out.reserve(max_l + 1);
    mpz_class sum = 1;  // radius 0
    mpz_class term;
    mpz_class qm1_pow = 1;
    out.emplace_back(sum);
    for (unsigned j = 1; j <= max_l; ++j) {
        if (j <= m) {
            qm1_pow *= (q - 1);
            mpz_bin_uiui(term.get_mpz_t(), m, j);
            sum += term * qm1_pow;
        }
        out.emplace_back(sum);
    }
    return out;
}

unsigned floor_log_q(const Nat& x, unsigned q) {
    if (q < 2) throw std::invalid_argument("floor_log_q: base must be >= 2");
    if (x.is_zero()) throw std::invalid_argument("floor_log_q: x must be >= 1");
    unsigned s = 0;
    mpz_class p = q;  // q^(s+1)
    while (cmp(p, x.raw()) <= 0) {
        ++s;
        p *= q;
    }
    return s;
}

}  // namespace codebounds
