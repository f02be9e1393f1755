#ifndef CODEBOUNDS_SWEEP_HPP
#define CODEBOUNDS_SWEEP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codebounds/aq_oracle.hpp"
#include "codebounds/litsyn_bounds.hpp"

namespace codebounds {

// Bounds that can take part in a comparison sweep. The order fixes the CSV
// column layout and the winner-name order.
enum class SweepBound : unsigned {
    BoundB = 0,
    Johnson = 1,
    Hamming = 2,
    Griesmer = 3,
    Elias = 4,
    Singleton = 5,
    Plotkin = 6,
};
inline constexpr unsigned kSweepBoundCount = 7;

inline constexpr unsigned bit(SweepBound b) { return 1u << static_cast<unsigned>(b); }

// The comparison set of the statistics tables: every bound except Plotkin,
// whose range is too narrow to rank.
inline constexpr unsigned kDefaultBounds =
    bit(SweepBound::BoundB) | bit(SweepBound::Johnson) | bit(SweepBound::Hamming) |
    bit(SweepBound::Griesmer) | bit(SweepBound::Elias) | bit(SweepBound::Singleton);

const char* sweep_bound_name(SweepBound b);
/// Parses a bound name ("boundB", "johnson", ...); nullopt if unknown.
std::optional<SweepBound> sweep_bound_from_name(const std::string& name);

struct SweepConfig {
    std::vector<unsigned> q_list;
    unsigned n_min = 3;
    unsigned n_max = 100;
    unsigned enabled_bounds = kDefaultBounds;
    DeltaMode delta_mode = DeltaMode::Floor;
    unsigned workers = 1;
};

// One sweep cell: the k-form of every enabled bound (absent when the bound
// does not apply), the best k and the argmin winner set.
struct ComparisonRow {
    unsigned q = 0, n = 0, d = 0;
    std::array<std::optional<unsigned>, kSweepBoundCount> k;
    unsigned best_k = 0;
    unsigned winners_mask = 0;
    bool delta_zero = false;          // every k-rejection in the Bound-B scan had delta = 0
    bool plotkin_used_inner = false;  // some inner estimate during the scan used Plotkin
};

/// Evaluates a single cell (exposed for spot checks and the CLI `best` command).
ComparisonRow evaluate_cell(const CodeParams& p, unsigned enabled_bounds, const AqOracle& oracle,
                            DeltaMode mode);

// One row per (q, n, d) with d = 3..n-1, in lexicographic (q, n, d) order
// regardless of worker count.
std::vector<ComparisonRow> run_sweep(const SweepConfig& cfg, const AqOracle& oracle);

struct QStats {
    unsigned q = 0;
    std::uint64_t grid_cells = 0;  // all (n,d) cells of the grid
    // wins + draws per bound (a draw counts for every winner)
    std::array<std::uint64_t, kSweepBoundCount> best_count{};
    std::uint64_t boundb_draws = 0;
    std::uint64_t boundb_strict_wins = 0;
    std::uint64_t delta_zero_count = 0;    // over Bound-B draws + wins
    std::uint64_t plotkin_used_count = 0;  // over Bound-B draws + wins
    std::optional<std::pair<unsigned, unsigned>> max_win_dn;  // (d, n) of max d/n among strict wins
};

struct StatsSummary {
    unsigned enabled_bounds = 0;
    std::vector<QStats> per_q;
};

StatsSummary compute_stats(const std::vector<ComparisonRow>& rows, unsigned enabled_bounds);

/// "12.34" style fixed two-decimal percentage of part/whole (0 when whole = 0).
std::string percent_2dp(std::uint64_t part, std::uint64_t whole);
/// Ratio a/b with three decimals, e.g. "0.640".
std::string ratio_3dp(unsigned a, unsigned b);
/// 1 - 1/q with two decimals, e.g. "0.97".
std::string plotkin_frontier_2dp(unsigned q);

std::string rows_to_csv(const std::vector<ComparisonRow>& rows);
std::string rows_to_json(const std::vector<ComparisonRow>& rows);
std::string stats_to_csv(const StatsSummary& stats);
std::string stats_to_json(const StatsSummary& stats);

// ---- Table 3 reproduction ------------------------------------------------

// Reference k-values for the twelve showcase parameter sets, as shipped with
// the library. The L column has no formula here and is carried as reference
// text only.
struct Table3Row {
    unsigned q, n, d;
    unsigned B, J, H, G, E, S, L;
};

const std::vector<Table3Row>& table3_reference();

struct Table3Result {
    struct Line {
        Table3Row ref;
        unsigned B, J, H, G, E, S;  // recomputed
        bool exact_ok;              // B, G, S, H match exactly
        bool tol_ok;                // J, E within +/-1
    };
    std::vector<Line> lines;
    unsigned mismatches = 0;  // lines violating the exact/TOL contract
    std::string report;
};

Table3Result run_table3(const AqOracle& oracle, DeltaMode mode);

}  // namespace codebounds

#endif
