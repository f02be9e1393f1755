// Command-line front end for the codebounds shared library.
//
// Subcommands: bound, best, exact, sweep, stats, table3. Exit codes: 0 on
// success, 2 on invalid parameters or unreadable inputs, 3 on a fixture
// mismatch under `table3 --strict`.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codebounds.h"

namespace {

struct ContextDeleter {
    void operator()(cb_context* ctx) const { cb_context_free(ctx); }
};
using ContextPtr = std::unique_ptr<cb_context, ContextDeleter>;

struct StringDeleter {
    void operator()(char* s) const { cb_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;

const std::vector<int> kStandardQ = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29};

int fail(const cb_context* ctx, cb_status status) {
    std::cerr << "error: " << cb_context_last_error(ctx) << " (" << cb_status_str(status)
              << ")\n";
    return kExitInvalid;
}

bool emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return false;
    }
    out << text;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact upper bounds on the size of error-correcting codes"};
    app.set_version_flag("--version", std::string("codebounds ") + cb_version());
    app.require_subcommand(1);

    std::string delta_mode = "floor";
    std::string known_values;
    std::string format = "csv";
    std::string out_path;
    int workers = 1;
    app.add_option("--delta-mode", delta_mode, "delta handling: floor or exact")
        ->check(CLI::IsMember({"floor", "exact"}));
    app.add_option("--known-values", known_values,
                   "CSV of known A_q(n,d) values (default: $CODEBOUNDS_KNOWN_VALUES)");
    app.add_option("--format", format, "output format for sweep/stats")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--workers", workers, "worker threads for sweeps")->check(CLI::Range(1, 256));

    int q = 2, n = 7, d = 3, t = -1, r = -1, epsilon = -1;
    bool witness = false;

    auto* bound_cmd = app.add_subcommand("bound", "evaluate one bound at (q,n,d)");
    std::string bound_name;
    bound_cmd->add_option("name", bound_name,
                          "singleton|hamming|plotkin|griesmer|johnson|elias|boundB|weakBoundB|"
                          "litsynLaihonen|boundA|restricted")
        ->required();
    bound_cmd->add_option("-q", q, "alphabet size")->required();
    bound_cmd->add_option("-n", n, "code length")->required();
    bound_cmd->add_option("-d", d, "minimum distance")->required();
    bound_cmd->add_option("-t", t, "punctured coordinates (litsynLaihonen, boundA)");
    bound_cmd->add_option("-r", r, "inner radius (litsynLaihonen, boundA)");
    bound_cmd->add_option("--epsilon", epsilon, "weight excess (restricted)");
    bound_cmd->add_flag("--witness", witness, "print the per-r audit trail (boundB)");

    auto* best_cmd = app.add_subcommand("best", "compare all bounds at (q,n,d)");
    bool with_plotkin = false;
    best_cmd->add_option("-q", q)->required();
    best_cmd->add_option("-n", n)->required();
    best_cmd->add_option("-d", d)->required();
    best_cmd->add_flag("--with-plotkin", with_plotkin, "rank Plotkin too (off by default)");

    auto* exact_cmd = app.add_subcommand("exact", "exact A_q(n,d) by exhaustive search");
    exact_cmd->add_option("-q", q)->required();
    exact_cmd->add_option("-n", n)->required();
    exact_cmd->add_option("-d", d)->required();

    std::vector<int> q_list;
    int n_min = 3, n_max = 100;
    auto* sweep_cmd = app.add_subcommand("sweep", "bound comparison over a parameter grid");
    sweep_cmd->add_option("--q", q_list, "alphabet sizes (default: the 16 standard values)");
    sweep_cmd->add_option("--n-min", n_min);
    sweep_cmd->add_option("--n-max", n_max);
    sweep_cmd->add_flag("--with-plotkin", with_plotkin);

    auto* stats_cmd = app.add_subcommand("stats", "winner statistics of a sweep");
    stats_cmd->add_option("--q", q_list);
    stats_cmd->add_option("--n-min", n_min);
    stats_cmd->add_option("--n-max", n_max);
    stats_cmd->add_flag("--with-plotkin", with_plotkin);

    auto* table3_cmd = app.add_subcommand("table3", "recompute the showcase rows and diff");
    bool strict = false;
    table3_cmd->add_flag("--strict", strict, "exit 3 when a row misses the contract");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    ContextPtr ctx(cb_context_new());
    if (!ctx) {
        std::cerr << "error: out of memory\n";
        return kExitInvalid;
    }
    if (cb_status st = cb_context_set_delta_mode(ctx.get(), delta_mode.c_str()))
        return fail(ctx.get(), st);

    if (known_values.empty()) {
        if (const char* env = std::getenv("CODEBOUNDS_KNOWN_VALUES")) known_values = env;
    }
    if (!known_values.empty()) {
        cb_status st = cb_context_load_known_values(ctx.get(), known_values.c_str());
        if (st == CB_EIO) {
            std::cerr << "warning: known-values file not readable, falling back to computed "
                         "bounds ("
                      << known_values << ")\n";
        } else if (st != CB_OK) {
            return fail(ctx.get(), st);
        }
    }

    char size_buf[CB_VALUE_BUFSIZE];
    if (*bound_cmd) {
        int k = 0;
        cb_status st;
        if (bound_name == "litsynLaihonen" || bound_name == "boundA") {
            if (t < 0 || r < 0) {
                std::cerr << "error: " << bound_name << " requires -t and -r\n";
                return kExitInvalid;
            }
            if (bound_name == "litsynLaihonen") {
                st = cb_litsyn_laihonen(ctx.get(), q, n, d, t, r, size_buf, sizeof size_buf);
            } else {
                int clamped = 0;
                st = cb_bound_a(ctx.get(), q, n, d, t, r, size_buf, sizeof size_buf, &clamped);
                if (st == CB_OK && clamped)
                    std::cerr << "note: inner term was negative; bound clamped to 0\n";
            }
            if (st) return fail(ctx.get(), st);
            std::cout << bound_name << "(q=" << q << ", n=" << n << ", d=" << d << ", t=" << t
                      << ", r=" << r << "): size <= " << size_buf << "\n";
            return kExitOk;
        }
        if (bound_name == "restricted") {
            if (epsilon < 1) {
                std::cerr << "error: restricted requires --epsilon >= 1\n";
                return kExitInvalid;
            }
            st = cb_restricted_code_bound(ctx.get(), q, n, d, epsilon, size_buf, sizeof size_buf);
            if (st) return fail(ctx.get(), st);
            std::cout << "restricted(q=" << q << ", n=" << n << ", d=" << d
                      << ", epsilon=" << epsilon << "): size <= " << size_buf
                      << "  (codes with all weights >= d+epsilon)\n";
            return kExitOk;
        }
        st = cb_bound_size(ctx.get(), bound_name.c_str(), q, n, d, size_buf, sizeof size_buf, &k);
        if (st == CB_ENOTAPPLICABLE) {
            std::cout << bound_name << "(q=" << q << ", n=" << n << ", d=" << d
                      << "): not applicable (requires q*d > n*(q-1))\n";
            return kExitOk;
        }
        if (st) return fail(ctx.get(), st);
        std::cout << bound_name << "(q=" << q << ", n=" << n << ", d=" << d
                  << "): size <= " << size_buf << ", k <= " << k << "\n";
        if (witness && bound_name == "boundB") {
            char* json = nullptr;
            if ((st = cb_bound_b_witness(ctx.get(), q, n, d, &json))) return fail(ctx.get(), st);
            CString holder(json);
            std::cout << holder.get();
        }
        return kExitOk;
    }

    if (*best_cmd) {
        unsigned mask = CB_BOUNDS_DEFAULT | (with_plotkin ? CB_BOUND_PLOTKIN : 0u);
        char* json = nullptr;
        if (cb_status st = cb_comparison_row(ctx.get(), q, n, d, mask, &json))
            return fail(ctx.get(), st);
        CString holder(json);
        std::cout << holder.get();
        return kExitOk;
    }

    if (*exact_cmd) {
        if (cb_status st = cb_aq_exact(ctx.get(), q, n, d, size_buf, sizeof size_buf))
            return fail(ctx.get(), st);
        std::cout << "A_" << q << "(" << n << "," << d << ") = " << size_buf << "\n";
        return kExitOk;
    }

    if (*sweep_cmd || *stats_cmd) {
        if (q_list.empty()) q_list = kStandardQ;
        unsigned mask = CB_BOUNDS_DEFAULT | (with_plotkin ? CB_BOUND_PLOTKIN : 0u);
        char* out = nullptr;
        cb_status st =
            *sweep_cmd
                ? cb_sweep(ctx.get(), q_list.data(), q_list.size(), n_min, n_max, mask,
                           format.c_str(), workers, &out)
                : cb_stats(ctx.get(), q_list.data(), q_list.size(), n_min, n_max, mask,
                           format.c_str(), workers, &out);
        if (st) return fail(ctx.get(), st);
        CString holder(out);
        return emit(holder.get(), out_path) ? kExitOk : kExitInvalid;
    }

    if (*table3_cmd) {
        char* report = nullptr;
        int mismatches = 0;
        if (cb_status st = cb_table3(ctx.get(), &report, &mismatches))
            return fail(ctx.get(), st);
        CString holder(report);
        if (!emit(holder.get(), out_path)) return kExitInvalid;
        if (strict && mismatches > 0) return kExitMismatch;
        return kExitOk;
    }

    return kExitInvalid;
}
