#include "codebounds/aq_oracle.hpp"

#include <mutex>

#include "codebounds/classical_bounds.hpp"

namespace codebounds {

namespace {

std::uint64_t cache_key(const CodeParams& p) {
    return (static_cast<std::uint64_t>(p.q) << 40) | (static_cast<std::uint64_t>(p.n) << 20) |
           p.d;
}

AqEstimate compute_estimate(const CodeParams& p, const KnownValuesTable& table) {
    if (auto known = table.lookup(p)) return {*known, BoundSource::Known, false};
    if (p.d == 1) return {pow_u(p.q, p.n), BoundSource::Trivial, false};
    if (p.d == 2) return {pow_u(p.q, p.n - 1), BoundSource::Trivial, false};

    Nat best = hamming_bound(p);
    BoundSource src = BoundSource::Hamming;
    auto consider = [&](Nat v, BoundSource s) {
        if (v < best) {
            best = std::move(v);
            src = s;
        }
    };
    consider(singleton_bound(p), BoundSource::Singleton);
    consider(johnson_bound(p), BoundSource::Johnson);
    consider(elias_bassalygo_bound(p), BoundSource::Elias);
    auto plotkin = plotkin_bound(p);
    if (plotkin) consider(*plotkin, BoundSource::Plotkin);
    bool plotkin_used = plotkin && *plotkin == best;
    return {std::move(best), src, plotkin_used};
}

}  // namespace

void AqOracle::reset(KnownValuesTable table) {
    std::unique_lock lock(mutex_);
    table_ = std::move(table);
    cache_.clear();
}

AqEstimate AqOracle::aq_upper(const CodeParams& p) const {
    std::uint64_t key = cache_key(p);
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    AqEstimate est = compute_estimate(p, table_);
    {
        std::unique_lock lock(mutex_);
        cache_.emplace(key, est);
    }
    return est;
}

}  // namespace codebounds
