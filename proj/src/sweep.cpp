#include "codebounds/sweep.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "codebounds/classical_bounds.hpp"

namespace codebounds {

const char* sweep_bound_name(SweepBound b) {
    switch (b) {
        case SweepBound::BoundB: return "boundB";
        case SweepBound::Johnson: return "johnson";
        case SweepBound::Hamming: return "hamming";
        case SweepBound::Griesmer: return "griesmer";
        case SweepBound::Elias: return "elias";
        case SweepBound::Singleton: return "singleton";
        case SweepBound::Plotkin: return "plotkin";
    }
    return "?";
}

std::optional<SweepBound> sweep_bound_from_name(const std::string& name) {
    for (unsigned i = 0; i < kSweepBoundCount; ++i) {
        auto b = static_cast<SweepBound>(i);
        if (name == sweep_bound_name(b)) return b;
    }
    return std::nullopt;
}

ComparisonRow evaluate_cell(const CodeParams& p, unsigned enabled_bounds, const AqOracle& oracle,
                            DeltaMode mode) {
    ComparisonRow row;
    row.q = p.q;
    row.n = p.n;
    row.d = p.d;

    auto set_k = [&](SweepBound b, unsigned value) { row.k[static_cast<unsigned>(b)] = value; };

    if (enabled_bounds & bit(SweepBound::BoundB)) {
        BoundBWitness witness = bound_b_max_k(p, oracle, mode);
        set_k(SweepBound::BoundB, witness.k);
        row.delta_zero = witness.rejections_delta_zero;
        row.plotkin_used_inner = witness.plotkin_used;
    }
    if (enabled_bounds & bit(SweepBound::Johnson))
        set_k(SweepBound::Johnson, k_form(johnson_bound(p), p.q));
    if (enabled_bounds & bit(SweepBound::Hamming))
        set_k(SweepBound::Hamming, k_form(hamming_bound(p), p.q));
    if (enabled_bounds & bit(SweepBound::Griesmer)) set_k(SweepBound::Griesmer, griesmer_max_k(p));
    if (enabled_bounds & bit(SweepBound::Elias))
        set_k(SweepBound::Elias, k_form(elias_bassalygo_bound(p), p.q));
    if (enabled_bounds & bit(SweepBound::Singleton))
        set_k(SweepBound::Singleton, p.n - p.d + 1);
    if (enabled_bounds & bit(SweepBound::Plotkin)) {
        if (auto plotkin = plotkin_bound(p)) set_k(SweepBound::Plotkin, k_form(*plotkin, p.q));
    }

    std::optional<unsigned> best;
    for (const auto& k : row.k)
        if (k && (!best || *k < *best)) best = *k;
    if (best) {
        row.best_k = *best;
        for (unsigned i = 0; i < kSweepBoundCount; ++i)
            if (row.k[i] && *row.k[i] == *best) row.winners_mask |= 1u << i;
    }
    return row;
}

std::vector<ComparisonRow> run_sweep(const SweepConfig& cfg, const AqOracle& oracle) {
    if (cfg.q_list.empty()) throw std::invalid_argument("sweep: q list must not be empty");
    if (cfg.n_min < 3) throw std::invalid_argument("sweep: n_min must be >= 3");
    if (cfg.n_max < cfg.n_min) throw std::invalid_argument("sweep: n_max must be >= n_min");
    if (cfg.enabled_bounds == 0) throw std::invalid_argument("sweep: no bounds enabled");

    struct Cell {
        unsigned q, n, d;
    };
    std::vector<Cell> cells;
    for (unsigned q : cfg.q_list)
        for (unsigned n = cfg.n_min; n <= cfg.n_max; ++n)
            for (unsigned d = 3; d + 1 <= n; ++d) cells.push_back({q, n, d});

    std::vector<ComparisonRow> rows(cells.size());
    auto work = [&](std::size_t i) {
        const Cell& c = cells[i];
        rows[i] = evaluate_cell(CodeParams(c.q, c.n, c.d), cfg.enabled_bounds, oracle,
                                cfg.delta_mode);
    };

    unsigned workers = cfg.workers == 0 ? 1 : cfg.workers;
    if (workers == 1 || cells.size() < 2) {
        for (std::size_t i = 0; i < cells.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto runner = [&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                work(i);
        };
        std::vector<std::thread> pool;
        unsigned count = std::min<std::size_t>(workers, cells.size());
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(runner);
        for (auto& th : pool) th.join();
    }
    return rows;
}

StatsSummary compute_stats(const std::vector<ComparisonRow>& rows, unsigned enabled_bounds) {
    if (rows.empty()) throw std::invalid_argument("compute_stats: no rows");
    StatsSummary summary;
    summary.enabled_bounds = enabled_bounds;

    auto stats_for = [&](unsigned q) -> QStats& {
        for (auto& s : summary.per_q)
            if (s.q == q) return s;
        summary.per_q.push_back(QStats{});
        summary.per_q.back().q = q;
        return summary.per_q.back();
    };

    for (const auto& row : rows) {
        QStats& s = stats_for(row.q);
        ++s.grid_cells;
        for (unsigned i = 0; i < kSweepBoundCount; ++i)
            if (row.winners_mask & (1u << i)) ++s.best_count[i];

        unsigned bb = bit(SweepBound::BoundB);
        if (row.winners_mask & bb) {
            bool strict = row.winners_mask == bb;
            if (strict) {
                ++s.boundb_strict_wins;
                if (!s.max_win_dn ||
                    static_cast<std::uint64_t>(row.d) * s.max_win_dn->second >
                        static_cast<std::uint64_t>(s.max_win_dn->first) * row.n)
                    s.max_win_dn = {row.d, row.n};
            } else {
                ++s.boundb_draws;
            }
            if (row.delta_zero) ++s.delta_zero_count;
            if (row.plotkin_used_inner) ++s.plotkin_used_count;
        }
    }
    return summary;
}

std::string percent_2dp(std::uint64_t part, std::uint64_t whole) {
    if (whole == 0) return "0.00";
    // round(10000 * part / whole) with half away from zero
    std::uint64_t scaled = (part * 10000 + whole / 2) / whole;
    std::ostringstream out;
    out << scaled / 100 << '.' << (scaled % 100 < 10 ? "0" : "") << scaled % 100;
    return out.str();
}

std::string ratio_3dp(unsigned a, unsigned b) {
    std::uint64_t scaled = (static_cast<std::uint64_t>(a) * 1000 + b / 2) / b;
    std::ostringstream out;
    out << scaled / 1000 << '.';
    out.width(3);
    out.fill('0');
    out << scaled % 1000;
    return out.str();
}

std::string plotkin_frontier_2dp(unsigned q) {
    // 1 - 1/q rounded to two decimals
    std::uint64_t scaled = (static_cast<std::uint64_t>(q - 1) * 100 + q / 2) / q;
    std::ostringstream out;
    out << scaled / 100 << '.' << (scaled % 100 < 10 ? "0" : "") << scaled % 100;
    return out.str();
}

namespace {

std::string winners_string(unsigned mask) {
    std::string out;
    for (unsigned i = 0; i < kSweepBoundCount; ++i)
        if (mask & (1u << i)) {
            if (!out.empty()) out += '|';
            out += sweep_bound_name(static_cast<SweepBound>(i));
        }
    return out;
}

}  // namespace

std::string rows_to_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << "q,n,d,boundB_k,johnson_k,hamming_k,griesmer_k,elias_k,singleton_k,plotkin_k,"
           "best_k,winners,delta_zero,plotkin_used_inner\n";
    for (const auto& row : rows) {
        out << row.q << ',' << row.n << ',' << row.d;
        for (const auto& k : row.k) {
            out << ',';
            if (k) out << *k;
        }
        out << ',' << row.best_k << ',' << winners_string(row.winners_mask) << ','
            << (row.delta_zero ? 1 : 0) << ',' << (row.plotkin_used_inner ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string rows_to_json(const std::vector<ComparisonRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        obj["q"] = row.q;
        obj["n"] = row.n;
        obj["d"] = row.d;
        for (unsigned i = 0; i < kSweepBoundCount; ++i) {
            std::string key = std::string(sweep_bound_name(static_cast<SweepBound>(i))) + "_k";
            if (row.k[i])
                obj[key] = *row.k[i];
            else
                obj[key] = nullptr;
        }
        obj["best_k"] = row.best_k;
        auto winners = nlohmann::ordered_json::array();
        for (unsigned i = 0; i < kSweepBoundCount; ++i)
            if (row.winners_mask & (1u << i))
                winners.push_back(sweep_bound_name(static_cast<SweepBound>(i)));
        obj["winners"] = winners;
        obj["delta_zero"] = row.delta_zero;
        obj["plotkin_used_inner"] = row.plotkin_used_inner;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string stats_to_csv(const StatsSummary& stats) {
    std::ostringstream out;
    out << "q,cells,boundB_best_pct,johnson_best_pct,hamming_best_pct,griesmer_best_pct,"
           "elias_best_pct,singleton_best_pct,plotkin_best_pct,boundB_draws_pct,"
           "boundB_wins_pct,delta_zero_pct,plotkin_used_pct,max_win_dn,plotkin_range_dn\n";
    for (const auto& s : stats.per_q) {
        out << s.q << ',' << s.grid_cells;
        for (unsigned i = 0; i < kSweepBoundCount; ++i) {
            out << ',';
            if (stats.enabled_bounds & (1u << i))
                out << percent_2dp(s.best_count[i], s.grid_cells);
        }
        std::uint64_t dw = s.boundb_draws + s.boundb_strict_wins;
        out << ',' << percent_2dp(s.boundb_draws, s.grid_cells) << ','
            << percent_2dp(s.boundb_strict_wins, s.grid_cells) << ','
            << percent_2dp(s.delta_zero_count, dw) << ',' << percent_2dp(s.plotkin_used_count, dw)
            << ',';
        if (s.max_win_dn) out << ratio_3dp(s.max_win_dn->first, s.max_win_dn->second);
        out << ',' << plotkin_frontier_2dp(s.q) << '\n';
    }
    return out.str();
}

std::string stats_to_json(const StatsSummary& stats) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : stats.per_q) {
        nlohmann::ordered_json obj;
        obj["q"] = s.q;
        obj["cells"] = s.grid_cells;
        for (unsigned i = 0; i < kSweepBoundCount; ++i) {
            std::string key =
                std::string(sweep_bound_name(static_cast<SweepBound>(i))) + "_best_pct";
            if (stats.enabled_bounds & (1u << i))
                obj[key] = percent_2dp(s.best_count[i], s.grid_cells);
            else
                obj[key] = nullptr;
        }
        std::uint64_t dw = s.boundb_draws + s.boundb_strict_wins;
        obj["boundB_draws_pct"] = percent_2dp(s.boundb_draws, s.grid_cells);
        obj["boundB_wins_pct"] = percent_2dp(s.boundb_strict_wins, s.grid_cells);
        obj["delta_zero_pct"] = percent_2dp(s.delta_zero_count, dw);
        obj["plotkin_used_pct"] = percent_2dp(s.plotkin_used_count, dw);
        if (s.max_win_dn)
            obj["max_win_dn"] = ratio_3dp(s.max_win_dn->first, s.max_win_dn->second);
        else
            obj["max_win_dn"] = nullptr;
        obj["plotkin_range_dn"] = plotkin_frontier_2dp(s.q);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace codebounds
