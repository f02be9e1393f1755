#ifndef CODEBOUNDS_NAT_HPP
#define CODEBOUNDS_NAT_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace codebounds {

struct NatDivMod;

// Arbitrary-precision non-negative integer. All bound arithmetic runs on
// these; magnitudes up to ~29^100 occur in a full sweep, so fixed-width
// integers are never used for values.
class Nat {
  public:
    Nat() : v_(0) {}
    explicit Nat(unsigned long x) : v_(x) {}
    explicit Nat(const mpz_class& v) : v_(v) {
        if (sgn(v_) < 0) throw std::invalid_argument("Nat: negative value");
    }

    static Nat from_decimal(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool fits_ulong() const { return v_.fits_ulong_p(); }
    unsigned long to_ulong() const;
    std::string to_decimal() const { return v_.get_str(); }

    Nat& operator+=(const Nat& o) {
        v_ += o.v_;
        return *this;
    }
    Nat& operator*=(const Nat& o) {
        v_ *= o.v_;
        return *this;
    }
    friend Nat operator+(Nat a, const Nat& b) { return a += b; }
    friend Nat operator*(Nat a, const Nat& b) { return a *= b; }

    /// a - b, or nullopt when b > a.
    static std::optional<Nat> checked_sub(const Nat& a, const Nat& b);
    /// a - b clamped at zero.
    static Nat saturating_sub(const Nat& a, const Nat& b);

    /// floor division with remainder; b must be positive.
    static NatDivMod divmod(const Nat& a, const Nat& b);
    /// floor(a / b); b must be positive.
    static Nat div_floor(const Nat& a, const Nat& b);
    /// ceil(a / b); b must be positive.
    static Nat div_ceil(const Nat& a, const Nat& b);

    static Nat pow(const Nat& base, unsigned exp);

    friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpz_class& raw() const { return v_; }

  private:
    mpz_class v_;
};

struct NatDivMod {
    Nat quot;
    Nat rem;
};

// Exact non-negative rational, kept in lowest terms with positive
// denominator. Comparisons against Nat are exact.
class Ratio {
  public:
    Ratio() : v_(0) {}
    Ratio(const Nat& num, const Nat& den);

    Nat num() const { return Nat(mpz_class(v_.get_num())); }
    Nat den() const { return Nat(mpz_class(v_.get_den())); }

    Nat floor() const;
    Nat ceil() const;
    bool is_integer() const { return v_.get_den() == 1; }

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    friend bool operator==(const Ratio& a, const Nat& b) { return cmp(a.v_, b.raw()) == 0; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Nat& b) {
        int c = cmp(a.v_, b.raw());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend Ratio operator+(const Ratio& a, const Ratio& b) { return Ratio(a.v_ + b.v_); }
    friend Ratio operator-(const Ratio& a, const Ratio& b);
    friend Ratio operator*(const Ratio& a, const Ratio& b) { return Ratio(a.v_ * b.v_); }

    const mpq_class& raw() const { return v_; }

  private:
    explicit Ratio(const mpq_class& v) : v_(v) {
        if (sgn(v_) < 0) throw std::invalid_argument("Ratio: negative value");
    }

    mpq_class v_;
};

}  // namespace codebounds

#endif
