#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

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

std::string fixture_path() { return std::string(CODEBOUNDS_DATA_DIR) + "/known_values_binary.csv"; }

ContextPtr make_context() {
    ContextPtr ctx(cb_context_new());
    REQUIRE(ctx);
    return ctx;
}

}  // namespace

TEST_CASE("context lifecycle and delta mode") {
    auto ctx = make_context();
    CHECK(cb_context_set_delta_mode(ctx.get(), "floor") == CB_OK);
    CHECK(cb_context_set_delta_mode(ctx.get(), "exact") == CB_OK);
    CHECK(cb_context_set_delta_mode(ctx.get(), "banana") == CB_EINVAL);
    CHECK(std::string(cb_context_last_error(ctx.get())).find("floor") != std::string::npos);
    CHECK(std::string(cb_version()) == "1.0.0");
    CHECK(std::string(cb_status_str(CB_EGUARD)) == "search guard exceeded");
}

TEST_CASE("single bound evaluation") {
    auto ctx = make_context();
    char buf[CB_VALUE_BUFSIZE];
    int k = -1;

    CHECK(cb_bound_size(ctx.get(), "singleton", 2, 10, 5, buf, sizeof buf, &k) == CB_OK);
    CHECK(std::string(buf) == "64");
    CHECK(k == 6);

    CHECK(cb_bound_size(ctx.get(), "boundB", 9, 17, 7, buf, sizeof buf, &k) == CB_OK);
    CHECK(k == 10);

    CHECK(cb_bound_size(ctx.get(), "weakBoundB", 9, 17, 7, buf, sizeof buf, &k) == CB_OK);
    CHECK(k == 10);

    CHECK(cb_bound_size(ctx.get(), "plotkin", 2, 10, 5, buf, sizeof buf, &k) ==
          CB_ENOTAPPLICABLE);
    CHECK(cb_bound_size(ctx.get(), "plotkin", 2, 10, 7, buf, sizeof buf, &k) == CB_OK);
    CHECK(std::string(buf) == "3");

    CHECK(cb_bound_size(ctx.get(), "nonsense", 2, 10, 5, buf, sizeof buf, &k) == CB_EINVAL);
    CHECK(cb_bound_size(ctx.get(), "hamming", 2, 10, 11, buf, sizeof buf, &k) == CB_EINVAL);
    CHECK(cb_bound_size(ctx.get(), "hamming", 1, 10, 3, buf, sizeof buf, &k) == CB_EINVAL);
}

TEST_CASE("buffer too small is reported") {
    auto ctx = make_context();
    char tiny[2];
    int k = 0;
    CHECK(cb_bound_size(ctx.get(), "singleton", 2, 10, 5, tiny, sizeof tiny, &k) == CB_ENOSPC);
    CHECK(std::string(cb_context_last_error(ctx.get())).find("3 bytes") != std::string::npos);
}

TEST_CASE("puncturing bounds through the C surface") {
    auto ctx = make_context();
    char buf[CB_VALUE_BUFSIZE];
    CHECK(cb_litsyn_laihonen(ctx.get(), 2, 8, 4, 2, 1, buf, sizeof buf) == CB_OK);
    CHECK(std::string(buf) == "42");
    int clamped = -1;
    CHECK(cb_bound_a(ctx.get(), 2, 7, 3, 1, 1, buf, sizeof buf, &clamped) == CB_OK);
    CHECK(std::string(buf) == "58");
    CHECK(clamped == 0);
    CHECK(cb_bound_a(ctx.get(), 2, 8, 4, 2, 3, buf, sizeof buf, &clamped) == CB_EINVAL);
    CHECK(cb_restricted_code_bound(ctx.get(), 2, 7, 3, 1, buf, sizeof buf) == CB_OK);
    CHECK(std::string(buf) == "15");
    CHECK(cb_restricted_code_bound(ctx.get(), 2, 7, 3, 0, buf, sizeof buf) == CB_EINVAL);
}

TEST_CASE("bound B witness JSON") {
    auto ctx = make_context();
    char* json = nullptr;
    REQUIRE(cb_bound_b_witness(ctx.get(), 9, 17, 7, &json) == CB_OK);
    CString holder(json);
    auto doc = nlohmann::json::parse(json);
    CHECK(doc["k"] == 10);
    REQUIRE(doc["checks"].size() == 4);
    CHECK(doc["checks"][0]["r"] == 0);
    // Plotkin ties Singleton at A_9(7,7); the tie keeps the first source but
    // records the Plotkin hit
    CHECK(doc["checks"][0]["inner_source"] == "singleton");
    CHECK(doc["checks"][0]["inner_plotkin_used"] == true);
    // lhs <= rhs as decimal strings
    for (const auto& check : doc["checks"]) {
        long long lhs = std::stoll(check["lhs"].get<std::string>());
        long long rhs = std::stoll(check["rhs"].get<std::string>());
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("known values and the oracle") {
    auto ctx = make_context();
    CHECK(cb_context_known_count(ctx.get()) == 0);
    REQUIRE(cb_context_load_known_values(ctx.get(), fixture_path().c_str()) == CB_OK);
    CHECK(cb_context_known_count(ctx.get()) == 273);
    CHECK(cb_context_load_known_values(ctx.get(), "/nonexistent.csv") == CB_EIO);

    char value[CB_VALUE_BUFSIZE], source[32];
    int plotkin_used = -1;
    REQUIRE(cb_context_load_known_values(ctx.get(), fixture_path().c_str()) == CB_OK);
    CHECK(cb_aq_upper(ctx.get(), 2, 7, 3, value, sizeof value, source, sizeof source,
                      &plotkin_used) == CB_OK);
    CHECK(std::string(value) == "16");
    CHECK(std::string(source) == "known");
    // the loaded table intercepts (2,10,7); a bare context shows Plotkin
    CHECK(cb_aq_upper(ctx.get(), 2, 10, 7, value, sizeof value, source, sizeof source,
                      &plotkin_used) == CB_OK);
    CHECK(std::string(source) == "known");
    auto bare = make_context();
    CHECK(cb_aq_upper(bare.get(), 2, 10, 7, value, sizeof value, source, sizeof source,
                      &plotkin_used) == CB_OK);
    CHECK(std::string(value) == "3");
    CHECK(plotkin_used == 1);
}

TEST_CASE("exhaustive searches and guards") {
    auto ctx = make_context();
    char value[CB_VALUE_BUFSIZE];
    CHECK(cb_aq_exact(ctx.get(), 2, 5, 3, value, sizeof value) == CB_OK);
    CHECK(std::string(value) == "4");
    CHECK(cb_aq_exact(ctx.get(), 2, 25, 3, value, sizeof value) == CB_EGUARD);
    int k = -1;
    CHECK(cb_max_systematic_k(ctx.get(), 2, 7, 3, &k) == CB_OK);
    CHECK(k == 4);
    CHECK(cb_max_systematic_k(ctx.get(), 2, 17, 3, &k) == CB_EGUARD);
    CHECK(cb_d3_closed_form(ctx.get(), 2, 10, &k) == CB_OK);
    CHECK(k == 6);
}

TEST_CASE("comparison row JSON") {
    auto ctx = make_context();
    char* json = nullptr;
    REQUIRE(cb_comparison_row(ctx.get(), 9, 17, 7, CB_BOUNDS_DEFAULT, &json) == CB_OK);
    CString holder(json);
    auto doc = nlohmann::json::parse(json);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["boundB_k"] == 10);
    CHECK(doc[0]["best_k"] == 10);
    CHECK(doc[0]["winners"] == nlohmann::json::array({"boundB"}));
    CHECK(doc[0]["plotkin_k"].is_null());
    CHECK(cb_comparison_row(ctx.get(), 9, 17, 7, 0, &json) == CB_EINVAL);
}

TEST_CASE("sweep determinism across workers through the C surface") {
    auto ctx = make_context();
    const int qs[] = {2, 3};
    char* out1 = nullptr;
    char* out4 = nullptr;
    REQUIRE(cb_sweep(ctx.get(), qs, 2, 3, 20, CB_BOUNDS_DEFAULT, "csv", 1, &out1) == CB_OK);
    REQUIRE(cb_sweep(ctx.get(), qs, 2, 3, 20, CB_BOUNDS_DEFAULT, "csv", 4, &out4) == CB_OK);
    CString h1(out1), h4(out4);
    CHECK(std::string(out1) == std::string(out4));
    CHECK(std::string(out1).find("q,n,d,boundB_k") == 0);

    char* stats = nullptr;
    REQUIRE(cb_stats(ctx.get(), qs, 2, 3, 20, CB_BOUNDS_DEFAULT, "json", 2, &stats) == CB_OK);
    CString hs(stats);
    auto doc = nlohmann::json::parse(stats);
    CHECK(doc.size() == 2);
    CHECK(doc[0]["q"] == 2);
    CHECK(doc[0]["plotkin_range_dn"] == "0.50");

    CHECK(cb_sweep(ctx.get(), qs, 2, 3, 20, CB_BOUNDS_DEFAULT, "yaml", 1, &out1) == CB_EINVAL);
    CHECK(cb_sweep(ctx.get(), nullptr, 0, 3, 20, CB_BOUNDS_DEFAULT, "csv", 1, &out1) ==
          CB_EINVAL);
}

TEST_CASE("table3 diff through the C surface") {
    auto ctx = make_context();
    char* report = nullptr;
    int mismatches = -1;
    REQUIRE(cb_table3(ctx.get(), &report, &mismatches) == CB_OK);
    CString holder(report);
    // the (11,90,55) row recomputes B = 31 against the printed 30; every
    // other cell of the contract matches
    CHECK(mismatches == 1);
    CHECK(std::string(report).find("mismatched rows: 1 of 12") != std::string::npos);
}
