#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "codebounds/classical_bounds.hpp"
#include "codebounds/litsyn_bounds.hpp"

using namespace codebounds;

namespace {

// Oracle stub with pinned values; anything not pinned is a test bug.
class StubOracle final : public AqSource {
  public:
    StubOracle(std::map<std::tuple<unsigned, unsigned, unsigned>, unsigned long> values)
        : values_(std::move(values)) {}

    AqEstimate aq_upper(const CodeParams& p) const override {
        auto it = values_.find({p.q, p.n, p.d});
        REQUIRE_MESSAGE(it != values_.end(),
                        "stub oracle missing (" << p.q << "," << p.n << "," << p.d << ")");
        return {Nat(it->second), BoundSource::Known, false};
    }

  private:
    std::map<std::tuple<unsigned, unsigned, unsigned>, unsigned long> values_;
};

// The Litsyn-Laihonen closed form at d = 3: largest k with q^(n-k) >= (q-1)k + 1.
unsigned ll_d3_closed_form(unsigned q, unsigned n) {
    unsigned best = 0;
    for (unsigned k = 1; k < n; ++k)
        if (Nat::pow(Nat(q), n - k) >= Nat(static_cast<unsigned long>(q - 1) * k + 1)) best = k;
    return best;
}

}  // namespace

TEST_CASE("restricted code bound") {
    // A_2(7,3) = 16 pinned from the exhaustive search
    StubOracle aq({{{2, 7, 3}, 16}, {{2, 10, 3}, 93}});
    // 16 - 8/29, floored
    CHECK(restricted_code_bound(CodeParams(2, 7, 3), 1, aq) == Nat(15ul));
    // 93 - B(2,10)/B(2,10) = 93 - 1
    CHECK(restricted_code_bound(CodeParams(2, 10, 3), 2, aq) == Nat(92ul));
    // the subtracted ratio is positive, so the bound always drops
    CHECK(restricted_code_bound(CodeParams(2, 10, 3), 2, aq) < Nat(93ul));
    CHECK_THROWS_AS(restricted_code_bound(CodeParams(2, 7, 3), 0, aq), std::invalid_argument);
    CHECK_THROWS_AS(restricted_code_bound(CodeParams(2, 7, 3), 5, aq), std::invalid_argument);
}

TEST_CASE("puncturing parameter validation") {
    CodeParams p(2, 8, 4);
    CHECK_THROWS_AS(validate_puncturing(p, {5, 0}), std::invalid_argument);  // t > n-d
    CHECK_THROWS_AS(validate_puncturing(p, {2, 3}), std::invalid_argument);  // r > t
    CHECK_THROWS_AS(validate_puncturing(p, {4, 3}), std::invalid_argument);  // 2r > d
    // d - 2r <= n - t is implied by t <= n - d, so no separate violation exists
    CHECK_NOTHROW(validate_puncturing(CodeParams(2, 9, 7), {2, 1}));
    CHECK_NOTHROW(validate_puncturing(p, {2, 1}));
}

TEST_CASE("litsyn-laihonen bound") {
    StubOracle aq({{{2, 6, 3}, 8}, {{2, 6, 2}, 32}});
    // r = 0 is the shortening bound q^t * aq(n-t, d)
    CHECK(litsyn_laihonen(CodeParams(2, 7, 3), {1, 0}, aq) == Nat(16ul));
    // floor(4 * 32 / 3)
    CHECK(litsyn_laihonen(CodeParams(2, 8, 4), {2, 1}, aq) == Nat(42ul));
    CHECK_THROWS_AS(litsyn_laihonen(CodeParams(2, 8, 4), {2, 3}, aq), std::invalid_argument);
}

TEST_CASE("litsyn-laihonen shortening form with the real oracle") {
    AqOracle oracle;
    for (unsigned q : {2u, 3u})
        for (unsigned n = 5; n <= 12; ++n)
            for (unsigned d = 2; d + 2 <= n; ++d)
                for (unsigned t = 0; t <= n - d && t <= 3; ++t) {
                    Nat expected = pow_u(q, t) * oracle.aq_upper(CodeParams(q, n - t, d)).value;
                    CHECK(litsyn_laihonen(CodeParams(q, n, d), {t, 0}, oracle) == expected);
                }
}

TEST_CASE("bound A") {
    AqOracle oracle;
    // delta' = B(1,6)/B(0,6) = 7, aq(6,1) = 64: floor(2/2 * (64-7+1))
    BoundAResult res = bound_a(CodeParams(2, 7, 3), {1, 1}, oracle);
    CHECK(res.value == Nat(58ul));
    CHECK(!res.inner_clamped);
    // identical in exact mode (the ratio is integral here)
    CHECK(bound_a(CodeParams(2, 7, 3), {1, 1}, oracle, DeltaMode::Exact).value == Nat(58ul));

    // r = 0 in floor mode reduces to q^t (aq + 1)
    for (unsigned q : {2u, 3u})
        for (unsigned n = 6; n <= 12; ++n)
            for (unsigned d = 2; d + 2 <= n; ++d) {
                Nat expected = pow_u(q, 2) * (oracle.aq_upper(CodeParams(q, n - 2, d)).value + Nat(1ul));
                CHECK(bound_a(CodeParams(q, n, d), {2, 0}, oracle).value == expected);
            }
}

TEST_CASE("bound A clamps a negative inner term") {
    // a tiny stubbed estimate forces aq - delta + 1 below zero
    StubOracle aq({{{2, 6, 1}, 1}});
    BoundAResult res = bound_a(CodeParams(2, 7, 3), {1, 1}, aq);
    CHECK(res.value == Nat());
    CHECK(res.inner_clamped);
}

TEST_CASE("bound A improves on litsyn-laihonen when delta is nonzero") {
    AqOracle oracle;
    for (unsigned q : {2u, 3u}) {
        for (unsigned n = 5; n <= 14; ++n) {
            for (unsigned d = 1; d <= n; ++d) {
                for (unsigned t = 0; t <= n - d; ++t) {
                    for (unsigned r = 0; r <= t && 2 * r <= d; ++r) {
                        if (d - 2 * r > n - t) continue;
                        CodeParams p(q, n, d);
                        PuncturingParams pp{t, r};
                        unsigned m = n - t;
                        unsigned d_in = d - 2 * r;
                        Nat delta = Nat::div_floor(
                            ball_size(r, m, q), ball_size(d_in == 0 ? 0 : d_in - 1, m, q));
                        if (delta >= Nat(1ul))
                            CHECK(bound_a(p, pp, oracle).value <= litsyn_laihonen(p, pp, oracle));
                    }
                }
            }
        }
    }
}

TEST_CASE("bound B reproduces the showcase rows") {
    AqOracle oracle;
    CHECK(bound_b_max_k(CodeParams(7, 45, 21), oracle).k == 22);
    CHECK(bound_b_max_k(CodeParams(9, 17, 7), oracle).k == 10);
    CHECK(bound_b_max_k(CodeParams(2, 7, 3), oracle).k == 4);
}

TEST_CASE("bound B witness audit trail") {
    AqOracle oracle;
    BoundBWitness w = bound_b_max_k(CodeParams(9, 17, 7), oracle);
    REQUIRE(w.k == 10);
    REQUIRE(w.checks.size() == 4);  // r = 0..3 all admissible at k = 10
    for (const auto& check : w.checks) {
        CHECK(check.lhs <= check.rhs);
        CHECK(check.lhs == ball_size(check.r, w.k, 9));
        CHECK(2 * check.r <= 7 - 1);
        CHECK(7 - 2 * check.r <= 17 - w.k);
    }
    // the r = 0 inner estimate is A_9(7,7), met by Plotkin
    CHECK(w.checks[0].inner_plotkin_used);
}

TEST_CASE("bound B respects the Singleton ceiling and the degenerate case") {
    AqOracle oracle;
    for (unsigned q : {2u, 5u})
        for (unsigned n = 4; n <= 20; ++n)
            for (unsigned d = 2; d < n; ++d)
                CHECK(bound_b_max_k(CodeParams(q, n, d), oracle).k <= n - d + 1);
    BoundBWitness degenerate = bound_b_max_k(CodeParams(3, 6, 6), oracle);
    CHECK(degenerate.k == 1);
    CHECK(degenerate.checks.empty());
    CHECK_THROWS_AS(bound_b_max_k(CodeParams(2, 5, 1), oracle), std::invalid_argument);
}

TEST_CASE("bound B at d = 2 returns the Singleton dimension") {
    AqOracle oracle;
    for (unsigned q : {2u, 3u})
        for (unsigned n = 4; n <= 12; ++n)
            CHECK(bound_b_max_k(CodeParams(q, n, 2), oracle).k == n - 1);
}

TEST_CASE("weak bound B dominates bound B") {
    AqOracle oracle;
    for (unsigned q : {2u, 3u, 9u})
        for (unsigned n = 4; n <= 24; ++n)
            for (unsigned d = 2; d < n; ++d) {
                CodeParams p(q, n, d);
                CHECK(weak_bound_b_max_k(p, oracle) >= bound_b_max_k(p, oracle).k);
            }
    CHECK(weak_bound_b_max_k(CodeParams(2, 7, 3), oracle) == 4);
    CHECK(weak_bound_b_max_k(CodeParams(9, 17, 7), oracle) == 10);
}

TEST_CASE("exact delta mode never admits a larger k") {
    AqOracle oracle;
    for (unsigned q : {2u, 4u})
        for (unsigned n = 4; n <= 20; ++n)
            for (unsigned d = 2; d < n; ++d) {
                CodeParams p(q, n, d);
                CHECK(bound_b_max_k(p, oracle, DeltaMode::Exact).k <=
                      bound_b_max_k(p, oracle, DeltaMode::Floor).k);
            }
}

TEST_CASE("admissible k sets are downward closed (audit)") {
    AqOracle oracle;
    for (unsigned q : {2u, 3u})
        for (unsigned n = 5; n <= 16; ++n)
            for (unsigned d = 3; d < n; ++d) {
                auto ks = bound_b_admissible_ks(CodeParams(q, n, d), oracle);
                bool contiguous = true;
                for (std::size_t i = 0; i < ks.size(); ++i)
                    if (ks[i] != i + 1) contiguous = false;
                if (!contiguous) {
                    // the scan design tolerates gaps but they deserve eyes
                    WARN_MESSAGE(false, "non-monotone admissible set at q=" << q << " n=" << n
                                                                            << " d=" << d);
                }
            }
}

TEST_CASE("d3 closed form") {
    CHECK(d3_closed_form(2, 7) == 4);
    CHECK(d3_closed_form(2, 10) == 6);
    CHECK_THROWS_AS(d3_closed_form(2, 2), std::invalid_argument);
    AqOracle oracle;
    for (unsigned q : {2u, 5u, 29u})
        for (unsigned n = 4; n <= 40; ++n) {
            unsigned closed = d3_closed_form(q, n);
            CHECK(closed == bound_b_max_k(CodeParams(q, n, 3), oracle).k);
            CHECK(closed == floor_log_q(hamming_bound(CodeParams(q, n, 3)), q));
            // the systematic constraint dominates the Litsyn-Laihonen one
            CHECK(closed <= ll_d3_closed_form(q, n));
        }
}
