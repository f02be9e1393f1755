#include "codebounds/nat.hpp"

namespace codebounds {

Nat Nat::from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Nat: empty decimal string");
    mpz_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Nat: bad decimal string '" + s + "'");
    return Nat(v);
}

unsigned long Nat::to_ulong() const {
    if (!v_.fits_ulong_p()) throw std::overflow_error("Nat: value does not fit unsigned long");
    return v_.get_ui();
}

std::optional<Nat> Nat::checked_sub(const Nat& a, const Nat& b) {
    if (b > a) return std::nullopt;
    return Nat(mpz_class(a.v_ - b.v_));
}

Nat Nat::saturating_sub(const Nat& a, const Nat& b) {
    if (b > a) return Nat();
    return Nat(mpz_class(a.v_ - b.v_));
}

NatDivMod Nat::divmod(const Nat& a, const Nat& b) {
    if (b.is_zero()) throw std::invalid_argument("Nat: division by zero");
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return {Nat(q), Nat(r)};
}

Nat Nat::div_floor(const Nat& a, const Nat& b) {
    if (b.is_zero()) throw std::invalid_argument("Nat: division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Nat(q);
}

Nat Nat::div_ceil(const Nat& a, const Nat& b) {
    if (b.is_zero()) throw std::invalid_argument("Nat: division by zero");
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Nat(q);
}

Nat Nat::pow(const Nat& base, unsigned exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exp);
    return Nat(r);
}

Ratio::Ratio(const Nat& num, const Nat& den) {
    if (den.is_zero()) throw std::invalid_argument("Ratio: zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
}

Ratio operator-(const Ratio& a, const Ratio& b) {
    if (b > a) throw std::invalid_argument("Ratio: subtraction would be negative");
    return Ratio(mpq_class(a.v_ - b.v_));
}

Nat Ratio::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Nat(q);
}

Nat Ratio::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Nat(q);
}

}  // namespace codebounds
