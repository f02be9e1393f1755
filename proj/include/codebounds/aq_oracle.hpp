#ifndef CODEBOUNDS_AQ_ORACLE_HPP
#define CODEBOUNDS_AQ_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>

#include "codebounds/params.hpp"

namespace codebounds {

// Ingested exact values of A_q(n,d). Immutable after load; each entry carries
// a free-text provenance note.
class KnownValuesTable {
  public:
    struct Entry {
        Nat value;
        std::string source;
    };

    KnownValuesTable() = default;

    // Parses a CSV file with header q,n,d,A[,source]. '#'-prefixed comment
    // lines and blank lines are skipped. Malformed rows (wrong arity,
    // non-integer fields, value outside [1, q^n], duplicate key) abort with
    // the offending row number.
    static KnownValuesTable load(const std::string& path);

    std::optional<Nat> lookup(const CodeParams& p) const;
    const Entry* find(unsigned q, unsigned n, unsigned d) const;
    std::size_t size() const { return entries_.size(); }

    const std::map<std::tuple<unsigned, unsigned, unsigned>, Entry>& entries() const {
        return entries_;
    }

  private:
    std::map<std::tuple<unsigned, unsigned, unsigned>, Entry> entries_;
};

/// Read-only source of A_q(n,d) upper estimates, safe for concurrent use.
class AqSource {
  public:
    virtual ~AqSource() = default;
    virtual AqEstimate aq_upper(const CodeParams& p) const = 0;
};

// The estimate used inside the puncturing bounds: a known exact value when
// the table has one, otherwise the best of the Hamming, Singleton, Johnson
// and Elias bounds, with Plotkin joining the minimum when applicable.
// d = 1 and d = 2 short-circuit to q^n and q^(n-1). Results are memoized;
// the cache is guarded for concurrent callers.
class AqOracle final : public AqSource {
  public:
    AqOracle() = default;
    explicit AqOracle(KnownValuesTable table) : table_(std::move(table)) {}

    AqEstimate aq_upper(const CodeParams& p) const override;

    /// Replaces the table and drops memoized results. Not thread-safe against readers.
    void reset(KnownValuesTable table);

    const KnownValuesTable& table() const { return table_; }

  private:
    KnownValuesTable table_;
    mutable std::unordered_map<std::uint64_t, AqEstimate> cache_;
    mutable std::shared_mutex mutex_;
};

// Exact A_q(n,d) by maximum-clique search over all q^n words, edges joining
// words at distance >= d. Translation invariance pins the zero word into the
// solution. Guarded by q^n <= 2^20.
Nat aq_exact_bruteforce(const CodeParams& p);

// Largest k such that an (n,k,q) systematic code with distance >= d exists,
// by backtracking over redundancy assignments. Guarded by q^n <= 2^16.
unsigned max_systematic_k_bruteforce(const CodeParams& p);

}  // namespace codebounds

#endif
