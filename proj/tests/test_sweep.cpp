#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "codebounds/sweep.hpp"

using namespace codebounds;

namespace {

unsigned idx(SweepBound b) { return static_cast<unsigned>(b); }

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.q_list = {2, 3};
    cfg.n_min = 3;
    cfg.n_max = 22;
    return cfg;
}

}  // namespace

TEST_CASE("evaluate_cell on the showcase parameters") {
    AqOracle oracle;
    SUBCASE("(7,45,21)") {
        ComparisonRow row = evaluate_cell(CodeParams(7, 45, 21), kDefaultBounds, oracle,
                                          DeltaMode::Floor);
        CHECK(row.k[idx(SweepBound::BoundB)] == 22u);
        CHECK(row.k[idx(SweepBound::Hamming)] == 24u);
        CHECK(row.k[idx(SweepBound::Griesmer)] == 23u);
        CHECK(row.k[idx(SweepBound::Elias)] == 23u);
        CHECK(row.k[idx(SweepBound::Singleton)] == 25u);
        // the Johnson variant is pinned only to +-1 around the reference 23
        CHECK(*row.k[idx(SweepBound::Johnson)] >= 22u);
        CHECK(*row.k[idx(SweepBound::Johnson)] <= 24u);
        CHECK(row.best_k == 22u);
        CHECK(row.winners_mask == bit(SweepBound::BoundB));
        CHECK(!row.k[idx(SweepBound::Plotkin)].has_value());
    }
    SUBCASE("(9,17,7)") {
        ComparisonRow row = evaluate_cell(CodeParams(9, 17, 7), kDefaultBounds, oracle,
                                          DeltaMode::Floor);
        CHECK(row.k[idx(SweepBound::BoundB)] == 10u);
        CHECK(row.k[idx(SweepBound::Johnson)] == 11u);
        CHECK(row.k[idx(SweepBound::Hamming)] == 11u);
        CHECK(row.k[idx(SweepBound::Griesmer)] == 11u);
        CHECK(row.k[idx(SweepBound::Elias)] == 11u);
        CHECK(row.k[idx(SweepBound::Singleton)] == 11u);
        CHECK(row.winners_mask == bit(SweepBound::BoundB));
        // at the accepted k the inner estimates hit Plotkin at r = 0
        CHECK(row.plotkin_used_inner);
    }
    SUBCASE("singleton at d = n-1") {
        ComparisonRow row = evaluate_cell(CodeParams(5, 12, 11), kDefaultBounds, oracle,
                                          DeltaMode::Floor);
        CHECK(row.k[idx(SweepBound::Singleton)] == 2u);
    }
}

TEST_CASE("plotkin column participates only when enabled and applicable") {
    AqOracle oracle;
    unsigned with_plotkin = kDefaultBounds | bit(SweepBound::Plotkin);
    ComparisonRow row = evaluate_cell(CodeParams(2, 10, 7), with_plotkin, oracle,
                                      DeltaMode::Floor);
    REQUIRE(row.k[idx(SweepBound::Plotkin)].has_value());
    CHECK(*row.k[idx(SweepBound::Plotkin)] == 1u);  // floor(log2 3)
    ComparisonRow inapplicable = evaluate_cell(CodeParams(2, 10, 5), with_plotkin, oracle,
                                               DeltaMode::Floor);
    CHECK(!inapplicable.k[idx(SweepBound::Plotkin)].has_value());
}

TEST_CASE("winner consistency across a sweep") {
    AqOracle oracle;
    auto rows = run_sweep(small_config(), oracle);
    REQUIRE(!rows.empty());
    for (const auto& row : rows) {
        unsigned best = row.best_k;
        for (unsigned i = 0; i < kSweepBoundCount; ++i) {
            if (!row.k[i]) {
                CHECK((row.winners_mask & (1u << i)) == 0);
                continue;
            }
            if (row.winners_mask & (1u << i))
                CHECK(*row.k[i] == best);
            else
                CHECK(*row.k[i] > best);
        }
    }
}

TEST_CASE("sweep output is byte-identical across worker counts") {
    AqOracle oracle;
    SweepConfig cfg = small_config();
    cfg.workers = 1;
    auto rows1 = run_sweep(cfg, oracle);
    cfg.workers = 4;
    auto rows4 = run_sweep(cfg, oracle);
    cfg.workers = 8;
    auto rows8 = run_sweep(cfg, oracle);
    CHECK(rows_to_csv(rows1) == rows_to_csv(rows4));
    CHECK(rows_to_csv(rows1) == rows_to_csv(rows8));
    CHECK(rows_to_json(rows1) == rows_to_json(rows8));
}

TEST_CASE("rows are in lexicographic (q,n,d) order") {
    AqOracle oracle;
    auto rows = run_sweep(small_config(), oracle);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto key = [](const ComparisonRow& r) { return std::tuple(r.q, r.n, r.d); };
        CHECK(key(rows[i - 1]) < key(rows[i]));
    }
}

TEST_CASE("disabling a competitor never lowers a remaining best percentage") {
    AqOracle oracle;
    SweepConfig cfg = small_config();
    auto rows_all = run_sweep(cfg, oracle);
    StatsSummary all = compute_stats(rows_all, cfg.enabled_bounds);

    SweepConfig without_johnson = cfg;
    without_johnson.enabled_bounds &= ~bit(SweepBound::Johnson);
    auto rows_wo = run_sweep(without_johnson, oracle);
    StatsSummary wo = compute_stats(rows_wo, without_johnson.enabled_bounds);

    REQUIRE(all.per_q.size() == wo.per_q.size());
    for (std::size_t i = 0; i < all.per_q.size(); ++i) {
        CHECK(all.per_q[i].grid_cells == wo.per_q[i].grid_cells);
        for (unsigned b = 0; b < kSweepBoundCount; ++b) {
            if (!(without_johnson.enabled_bounds & (1u << b))) continue;
            CHECK(wo.per_q[i].best_count[b] >= all.per_q[i].best_count[b]);
        }
    }
}

TEST_CASE("draws are counted for every winner") {
    AqOracle oracle;
    // (2,10,3): several bounds tie at k = 6
    ComparisonRow row = evaluate_cell(CodeParams(2, 10, 3), kDefaultBounds, oracle,
                                      DeltaMode::Floor);
    std::vector<ComparisonRow> rows{row};
    StatsSummary stats = compute_stats(rows, kDefaultBounds);
    REQUIRE(stats.per_q.size() == 1);
    const QStats& s = stats.per_q[0];
    CHECK(s.grid_cells == 1);
    unsigned winners = 0;
    for (unsigned b = 0; b < kSweepBoundCount; ++b)
        if (row.winners_mask & (1u << b)) {
            ++winners;
            CHECK(s.best_count[b] == 1);
            CHECK(percent_2dp(s.best_count[b], s.grid_cells) == "100.00");
        }
    CHECK(winners >= 2);
}

TEST_CASE("formatting helpers") {
    CHECK(percent_2dp(9077, 10000) == "90.77");
    CHECK(percent_2dp(0, 5) == "0.00");
    CHECK(percent_2dp(1, 3) == "33.33");
    CHECK(percent_2dp(2, 3) == "66.67");
    CHECK(percent_2dp(5, 5) == "100.00");
    CHECK(percent_2dp(1, 0) == "0.00");
    CHECK(ratio_3dp(16, 25) == "0.640");
    CHECK(ratio_3dp(47, 100) == "0.470");
    CHECK(plotkin_frontier_2dp(2) == "0.50");
    CHECK(plotkin_frontier_2dp(3) == "0.67");
    CHECK(plotkin_frontier_2dp(7) == "0.86");
    CHECK(plotkin_frontier_2dp(29) == "0.97");
}

TEST_CASE("csv schema is stable") {
    AqOracle oracle;
    SweepConfig cfg;
    cfg.q_list = {9};
    cfg.n_min = 17;
    cfg.n_max = 17;
    auto rows = run_sweep(cfg, oracle);
    std::string csv = rows_to_csv(rows);
    std::istringstream in(csv);
    std::string header, first;
    std::getline(in, header);
    CHECK(header ==
          "q,n,d,boundB_k,johnson_k,hamming_k,griesmer_k,elias_k,singleton_k,plotkin_k,"
          "best_k,winners,delta_zero,plotkin_used_inner");
    // find the d = 7 row
    std::string line;
    std::string wanted;
    while (std::getline(in, line))
        if (line.rfind("9,17,7,", 0) == 0) wanted = line;
    CHECK(wanted == "9,17,7,10,11,11,11,11,11,,10,boundB,1,1");
}

TEST_CASE("stats csv carries the frontier and win ratio columns") {
    AqOracle oracle;
    SweepConfig cfg;
    cfg.q_list = {9};
    cfg.n_min = 3;
    cfg.n_max = 30;
    auto rows = run_sweep(cfg, oracle);
    std::string csv = stats_to_csv(compute_stats(rows, cfg.enabled_bounds));
    std::istringstream in(csv);
    std::string header, line;
    std::getline(in, header);
    CHECK(header ==
          "q,cells,boundB_best_pct,johnson_best_pct,hamming_best_pct,griesmer_best_pct,"
          "elias_best_pct,singleton_best_pct,plotkin_best_pct,boundB_draws_pct,"
          "boundB_wins_pct,delta_zero_pct,plotkin_used_pct,max_win_dn,plotkin_range_dn");
    std::getline(in, line);
    CHECK(line.rfind("9,", 0) == 0);
    CHECK(line.substr(line.size() - 4) == "0.89");  // 1 - 1/9 to two decimals
}

TEST_CASE("table3 report diffs against the shipped reference") {
    AqOracle oracle;
    Table3Result result = run_table3(oracle, DeltaMode::Floor);
    REQUIRE(result.lines.size() == 12);
    // every row except (11,90,55) reproduces B, G, S, H exactly and J, E
    // within one; that row computes B = 31 against the printed 30 (see the
    // report) and is surfaced as a mismatch rather than hidden
    unsigned bad = 0;
    for (const auto& line : result.lines) {
        CHECK(line.tol_ok);
        if (!line.exact_ok) {
            ++bad;
            CHECK(line.ref.q == 11);
            CHECK(line.B == 31);
            CHECK(line.ref.B == 30);
            CHECK(line.H == line.ref.H);
            CHECK(line.G == line.ref.G);
            CHECK(line.S == line.ref.S);
        }
    }
    CHECK(bad == result.mismatches);
    CHECK(result.mismatches == 1);
    CHECK(result.report.find("mismatched rows: 1 of 12") != std::string::npos);
}

TEST_CASE("sweep config validation") {
    AqOracle oracle;
    SweepConfig cfg;
    cfg.q_list = {};
    CHECK_THROWS_AS(run_sweep(cfg, oracle), std::invalid_argument);
    cfg.q_list = {2};
    cfg.n_min = 2;
    CHECK_THROWS_AS(run_sweep(cfg, oracle), std::invalid_argument);
    cfg.n_min = 5;
    cfg.n_max = 4;
    CHECK_THROWS_AS(run_sweep(cfg, oracle), std::invalid_argument);
    cfg.n_max = 10;
    cfg.enabled_bounds = 0;
    CHECK_THROWS_AS(run_sweep(cfg, oracle), std::invalid_argument);
    CHECK_THROWS_AS(compute_stats({}, kDefaultBounds), std::invalid_argument);
}
