#pragma once

#include "frobenius/bigint.hpp"
#include "frobenius/params.hpp"
#include "frobenius/stat_report.hpp"

#include "frobenius/json_types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace frob {

/// Largest RepTable bound the oracle will allocate. Read from the
/// FROBENIUS_MAX_BOUND environment variable, default 2^24.
std::uint64_t max_table_bound();

/// counts[j] = r(a_1, ..., a_n; j) for 0 <= j <= bound.
struct RepTable {
    Params params;
    std::vector<Int> counts;

    std::uint64_t bound() const noexcept { return counts.size() - 1; }
};

/// Throws Error(BoundTooLarge) when bound exceeds ceiling.
RepTable rep_table(const Params& params, std::uint64_t bound, std::uint64_t ceiling = max_table_bound());

/// Elements with exactly k (or at most k) representations.
struct GapSet {
    Params params;
    std::uint64_t k = 0;
    std::vector<std::uint64_t> elements;
    bool complete = false;

    friend bool operator==(const GapSet&, const GapSet&) = default;
};

enum class Membership { Exactly, AtMost };

/// First j such that counts[j .. j + a_1 - 1] all exceed k, if the table
/// holds such a window. Because r(j + a_1) >= r(j), every integer from there
/// on has more than k representations.
std::optional<std::uint64_t> certified_window(const RepTable& table, std::uint64_t k);

/// Members of the set visible in an existing table; complete iff a window
/// certifies that no larger member exists.
GapSet collect(const RepTable& table, std::uint64_t k, Membership mode);

/// With a bound: every j <= bound in the set. Without: grows the table from
/// (k+1) a_1 a_n, doubling until a certifying window appears; throws
/// Error(Indeterminate) if that would pass the bound ceiling and
/// Error(InfiniteSet) for the single-coin case where the set is all of Z>=0.
GapSet enumerate_exact_k(const Params& params, std::uint64_t k, std::optional<std::uint64_t> bound = {});
GapSet enumerate_at_most_k(const Params& params, std::uint64_t k, std::optional<std::uint64_t> bound = {});
GapSet enumerate(const Params& params, std::uint64_t k, Membership mode, std::optional<std::uint64_t> bound = {});

class OracleStats {
public:
    OracleStats(const GapSet& set, unsigned m);

    const Int& count() const noexcept { return count_; }
    const Int& power_sum() const noexcept { return power_sum_; }
    unsigned m() const noexcept { return m_; }
    /// nullopt for the empty set; throws Error(IncompleteSet) unless the set
    /// was certified complete.
    std::optional<Int> max() const;

private:
    Int count_;
    Int power_sum_;
    unsigned m_;
    bool complete_;
    std::optional<Int> max_;
};

/// Count, max and sum of j^m over the set.
OracleStats oracle_stats(const GapSet& set, unsigned m);

/// One statistic computed entirely by enumeration. PowerSum uses m (default 1).
StatReport oracle_statistic(const Params& params, Stat stat, std::uint64_t k, std::optional<unsigned> m = {});

/// {"params":[...], "k":K, "complete":bool, "elements":["..", ...]}
Json to_json(const GapSet& set);
GapSet gap_set_from_json(const Json& j);

} // namespace frob
