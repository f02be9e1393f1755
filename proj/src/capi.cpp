#include "codebounds.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "codebounds/classical_bounds.hpp"
#include "codebounds/litsyn_bounds.hpp"
#include "codebounds/sweep.hpp"

using namespace codebounds;

struct cb_context {
    AqOracle oracle;
    DeltaMode delta_mode = DeltaMode::Floor;
    std::string last_error;
};

namespace {

cb_status fail(cb_context* ctx, cb_status status, const std::string& message) {
    if (ctx) ctx->last_error = message;
    return status;
}

// Maps exceptions from the core onto status codes. The core throws
// invalid_argument for precondition violations (including the brute-force
// guards) and runtime_error for file problems.
template <typename Fn>
cb_status guarded(cb_context* ctx, Fn&& fn) {
    if (!ctx) return CB_EINVAL;
    ctx->last_error.clear();
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        bool guard = what.find("guard") != std::string::npos;
        return fail(ctx, guard ? CB_EGUARD : CB_EINVAL, what);
    } catch (const std::runtime_error& e) {
        std::string what = e.what();
        bool io = what.find("not found") != std::string::npos;
        return fail(ctx, io ? CB_EIO : CB_EPARSE, what);
    } catch (const std::exception& e) {
        return fail(ctx, CB_EINTERNAL, e.what());
    }
}

cb_status write_str(cb_context* ctx, const std::string& s, char* buf, size_t cap) {
    if (!buf) return fail(ctx, CB_EINVAL, "null output buffer");
    if (s.size() + 1 > cap)
        return fail(ctx, CB_ENOSPC,
                    "output buffer too small: need " + std::to_string(s.size() + 1) + " bytes");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return CB_OK;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cb_status check_params(cb_context* ctx, int q, int n, int d) {
    if (q < 2) return fail(ctx, CB_EINVAL, "q must be >= 2");
    if (n < 1) return fail(ctx, CB_EINVAL, "n must be >= 1");
    if (d < 1 || d > n) return fail(ctx, CB_EINVAL, "need 1 <= d <= n");
    return CB_OK;
}

nlohmann::ordered_json witness_json(const BoundBWitness& witness) {
    nlohmann::ordered_json obj;
    obj["k"] = witness.k;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : witness.checks) {
        nlohmann::ordered_json jc;
        jc["r"] = c.r;
        jc["lhs"] = c.lhs.to_decimal();
        jc["rhs"] = c.rhs.to_decimal();
        jc["delta"] = c.delta.to_decimal();
        jc["inner_source"] = to_string(c.inner_source);
        jc["inner_plotkin_used"] = c.inner_plotkin_used;
        checks.push_back(std::move(jc));
    }
    obj["checks"] = std::move(checks);
    return obj;
}

}  // namespace

extern "C" {

const char* cb_version(void) { return "1.0.0"; }

const char* cb_status_str(cb_status status) {
    switch (status) {
        case CB_OK: return "ok";
        case CB_EINVAL: return "invalid parameters";
        case CB_ENOTAPPLICABLE: return "not applicable";
        case CB_EGUARD: return "search guard exceeded";
        case CB_EIO: return "file not readable";
        case CB_EPARSE: return "malformed input";
        case CB_ENOSPC: return "buffer too small";
        case CB_EINTERNAL: return "internal error";
    }
    return "?";
}

cb_context* cb_context_new(void) { return new (std::nothrow) cb_context(); }

void cb_context_free(cb_context* ctx) { delete ctx; }

const char* cb_context_last_error(const cb_context* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

cb_status cb_context_set_delta_mode(cb_context* ctx, const char* mode) {
    return guarded(ctx, [&]() -> cb_status {
        if (!mode) return fail(ctx, CB_EINVAL, "null delta mode");
        std::string m = mode;
        if (m == "floor")
            ctx->delta_mode = DeltaMode::Floor;
        else if (m == "exact")
            ctx->delta_mode = DeltaMode::Exact;
        else
            return fail(ctx, CB_EINVAL, "delta mode must be 'floor' or 'exact'");
        return CB_OK;
    });
}

cb_status cb_context_load_known_values(cb_context* ctx, const char* path) {
    return guarded(ctx, [&]() -> cb_status {
        if (!path) return fail(ctx, CB_EINVAL, "null path");
        ctx->oracle.reset(KnownValuesTable::load(path));
        return CB_OK;
    });
}

int cb_context_known_count(const cb_context* ctx) {
    return ctx ? static_cast<int>(ctx->oracle.table().size()) : 0;
}

cb_status cb_bound_size(cb_context* ctx, const char* name, int q, int n, int d, char* size_buf,
                        size_t size_cap, int* k_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (!name) return fail(ctx, CB_EINVAL, "null bound name");
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        CodeParams p(static_cast<unsigned>(q), static_cast<unsigned>(n),
                     static_cast<unsigned>(d));
        std::string bound = name;
        Nat size;
        unsigned k;
        if (bound == "singleton") {
            size = singleton_bound(p);
            k = k_form(size, p.q);
        } else if (bound == "hamming") {
            size = hamming_bound(p);
            k = k_form(size, p.q);
        } else if (bound == "plotkin") {
            auto v = plotkin_bound(p);
            if (!v)
                return fail(ctx, CB_ENOTAPPLICABLE,
                            "plotkin bound requires q*d > n*(q-1)");
            size = *v;
            k = k_form(size, p.q);
        } else if (bound == "griesmer") {
            k = griesmer_max_k(p);
            size = pow_u(p.q, k);
        } else if (bound == "johnson") {
            size = johnson_bound(p);
            k = k_form(size, p.q);
        } else if (bound == "elias") {
            size = elias_bassalygo_bound(p);
            k = k_form(size, p.q);
        } else if (bound == "boundB") {
            k = bound_b_max_k(p, ctx->oracle, ctx->delta_mode).k;
            size = pow_u(p.q, k);
        } else if (bound == "weakBoundB") {
            k = weak_bound_b_max_k(p, ctx->oracle);
            size = pow_u(p.q, k);
        } else {
            return fail(ctx, CB_EINVAL, "unknown bound name '" + bound + "'");
        }
        if (k_out) *k_out = static_cast<int>(k);
        return write_str(ctx, size.to_decimal(), size_buf, size_cap);
    });
}

cb_status cb_restricted_code_bound(cb_context* ctx, int q, int n, int d, int epsilon,
                                   char* size_buf, size_t size_cap) {
    return guarded(ctx, [&]() -> cb_status {
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        if (epsilon < 1) return fail(ctx, CB_EINVAL, "epsilon must be >= 1");
        CodeParams p(q, n, d);
        Nat v = restricted_code_bound(p, static_cast<unsigned>(epsilon), ctx->oracle);
        return write_str(ctx, v.to_decimal(), size_buf, size_cap);
    });
}

cb_status cb_litsyn_laihonen(cb_context* ctx, int q, int n, int d, int t, int r, char* size_buf,
                             size_t size_cap) {
    return guarded(ctx, [&]() -> cb_status {
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        if (t < 0 || r < 0) return fail(ctx, CB_EINVAL, "t and r must be >= 0");
        CodeParams p(q, n, d);
        Nat v = litsyn_laihonen(p, {static_cast<unsigned>(t), static_cast<unsigned>(r)},
                                ctx->oracle);
        return write_str(ctx, v.to_decimal(), size_buf, size_cap);
    });
}

cb_status cb_bound_a(cb_context* ctx, int q, int n, int d, int t, int r, char* size_buf,
                     size_t size_cap, int* clamped_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        if (t < 0 || r < 0) return fail(ctx, CB_EINVAL, "t and r must be >= 0");
        CodeParams p(q, n, d);
        BoundAResult res = bound_a(p, {static_cast<unsigned>(t), static_cast<unsigned>(r)},
                                   ctx->oracle, ctx->delta_mode);
        if (clamped_out) *clamped_out = res.inner_clamped ? 1 : 0;
        return write_str(ctx, res.value.to_decimal(), size_buf, size_cap);
    });
}

cb_status cb_bound_b(cb_context* ctx, int q, int n, int d, int* k_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        BoundBWitness w = bound_b_max_k(CodeParams(q, n, d), ctx->oracle, ctx->delta_mode);
        if (k_out) *k_out = static_cast<int>(w.k);
        return CB_OK;
    });
}

cb_status cb_bound_b_witness(cb_context* ctx, int q, int n, int d, char** json_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (!json_out) return fail(ctx, CB_EINVAL, "null output pointer");
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        BoundBWitness w = bound_b_max_k(CodeParams(q, n, d), ctx->oracle, ctx->delta_mode);
        *json_out = dup_string(witness_json(w).dump(2) + "\n");
        return CB_OK;
    });
}

cb_status cb_weak_bound_b(cb_context* ctx, int q, int n, int d, int* k_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        unsigned k = weak_bound_b_max_k(CodeParams(q, n, d), ctx->oracle);
        if (k_out) *k_out = static_cast<int>(k);
        return CB_OK;
    });
}

cb_status cb_d3_closed_form(cb_context* ctx, int q, int n, int* k_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (q < 2 || n < 3) return fail(ctx, CB_EINVAL, "need q >= 2 and n >= 3");
        unsigned k = d3_closed_form(static_cast<unsigned>(q), static_cast<unsigned>(n));
        if (k_out) *k_out = static_cast<int>(k);
        return CB_OK;
    });
}

cb_status cb_aq_upper(cb_context* ctx, int q, int n, int d, char* value_buf, size_t value_cap,
                      char* source_buf, size_t source_cap, int* plotkin_used_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        AqEstimate est = ctx->oracle.aq_upper(CodeParams(q, n, d));
        if (plotkin_used_out) *plotkin_used_out = est.plotkin_used ? 1 : 0;
        if (source_buf) {
            if (cb_status st = write_str(ctx, to_string(est.source), source_buf, source_cap))
                return st;
        }
        return write_str(ctx, est.value.to_decimal(), value_buf, value_cap);
    });
}

cb_status cb_aq_exact(cb_context* ctx, int q, int n, int d, char* value_buf, size_t value_cap) {
    return guarded(ctx, [&]() -> cb_status {
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        Nat v = aq_exact_bruteforce(CodeParams(q, n, d));
        return write_str(ctx, v.to_decimal(), value_buf, value_cap);
    });
}

cb_status cb_max_systematic_k(cb_context* ctx, int q, int n, int d, int* k_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        unsigned k = max_systematic_k_bruteforce(CodeParams(q, n, d));
        if (k_out) *k_out = static_cast<int>(k);
        return CB_OK;
    });
}

cb_status cb_comparison_row(cb_context* ctx, int q, int n, int d, unsigned bounds_mask,
                            char** json_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (!json_out) return fail(ctx, CB_EINVAL, "null output pointer");
        if (cb_status st = check_params(ctx, q, n, d)) return st;
        if (bounds_mask == 0) return fail(ctx, CB_EINVAL, "empty bounds mask");
        ComparisonRow row =
            evaluate_cell(CodeParams(q, n, d), bounds_mask, ctx->oracle, ctx->delta_mode);
        std::vector<ComparisonRow> rows{row};
        *json_out = dup_string(rows_to_json(rows));
        return CB_OK;
    });
}

namespace {

cb_status sweep_common(cb_context* ctx, const int* q_values, size_t q_count, int n_min, int n_max,
                       unsigned bounds_mask, const char* format, int workers, bool stats,
                       char** out) {
    if (!out) return fail(ctx, CB_EINVAL, "null output pointer");
    if (!q_values || q_count == 0) return fail(ctx, CB_EINVAL, "empty q list");
    std::string fmt = format ? format : "csv";
    if (fmt != "csv" && fmt != "json") return fail(ctx, CB_EINVAL, "format must be csv or json");
    SweepConfig cfg;
    for (size_t i = 0; i < q_count; ++i) {
        if (q_values[i] < 2) return fail(ctx, CB_EINVAL, "q values must be >= 2");
        cfg.q_list.push_back(static_cast<unsigned>(q_values[i]));
    }
    if (n_min < 3 || n_max < n_min) return fail(ctx, CB_EINVAL, "need 3 <= n_min <= n_max");
    cfg.n_min = static_cast<unsigned>(n_min);
    cfg.n_max = static_cast<unsigned>(n_max);
    cfg.enabled_bounds = bounds_mask;
    cfg.delta_mode = ctx->delta_mode;
    cfg.workers = workers < 1 ? 1 : static_cast<unsigned>(workers);
    std::vector<ComparisonRow> rows = run_sweep(cfg, ctx->oracle);
    std::string text;
    if (stats) {
        StatsSummary summary = compute_stats(rows, cfg.enabled_bounds);
        text = fmt == "csv" ? stats_to_csv(summary) : stats_to_json(summary);
    } else {
        text = fmt == "csv" ? rows_to_csv(rows) : rows_to_json(rows);
    }
    *out = dup_string(text);
    return CB_OK;
}

}  // namespace

cb_status cb_sweep(cb_context* ctx, const int* q_values, size_t q_count, int n_min, int n_max,
                   unsigned bounds_mask, const char* format, int workers, char** out) {
    return guarded(ctx, [&]() -> cb_status {
        return sweep_common(ctx, q_values, q_count, n_min, n_max, bounds_mask, format, workers,
                            false, out);
    });
}

cb_status cb_stats(cb_context* ctx, const int* q_values, size_t q_count, int n_min, int n_max,
                   unsigned bounds_mask, const char* format, int workers, char** out) {
    return guarded(ctx, [&]() -> cb_status {
        return sweep_common(ctx, q_values, q_count, n_min, n_max, bounds_mask, format, workers,
                            true, out);
    });
}

cb_status cb_table3(cb_context* ctx, char** report_out, int* mismatches_out) {
    return guarded(ctx, [&]() -> cb_status {
        if (!report_out) return fail(ctx, CB_EINVAL, "null output pointer");
        Table3Result res = run_table3(ctx->oracle, ctx->delta_mode);
        if (mismatches_out) *mismatches_out = static_cast<int>(res.mismatches);
        *report_out = dup_string(res.report);
        return CB_OK;
    });
}

void cb_string_free(char* s) { delete[] s; }

}  // extern "C"
