#include "frobenius/oracle.hpp"
#include "frobenius/error.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace frob {

namespace {

constexpr std::uint64_t kDefaultMaxBound = std::uint64_t{1} << 24;

bool matches(const Int& count, std::uint64_t k, Membership mode) {
    const auto kk = static_cast<unsigned long>(k);
    return mode == Membership::Exactly ? count == kk : count <= kk;
}

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
    if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x)
        return std::numeric_limits<std::uint64_t>::max();
    return x * y;
}

// With a single coin (necessarily 1) every j has exactly one representation.
// Returns true when the requested set is all of Z>=0, false when it is empty.
bool single_coin_set_is_everything(std::uint64_t k, Membership mode) {
    return mode == Membership::Exactly ? k == 1 : k >= 1;
}

} // namespace

std::uint64_t max_table_bound() {
    if (const char* env = std::getenv("FROBENIUS_MAX_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultMaxBound;
}

RepTable rep_table(const Params& params, std::uint64_t bound, std::uint64_t ceiling) {
    if (bound > ceiling)
        throw Error(ErrorKind::BoundTooLarge,
                    "bound " + std::to_string(bound) + " exceeds ceiling " + std::to_string(ceiling));
    RepTable table{params, std::vector<Int>(bound + 1)};
    auto& counts = table.counts;
    counts[0] = 1;
    // One denomination at a time, so each multiset of coins is counted once.
    for (std::uint64_t a : params.values())
        for (std::uint64_t j = a; j <= bound; ++j)
            counts[j] += counts[j - a];
    return table;
}

std::optional<std::uint64_t> certified_window(const RepTable& table, std::uint64_t k) {
    const std::uint64_t width = table.params.smallest();
    const auto threshold = static_cast<unsigned long>(k);
    std::uint64_t run = 0;
    for (std::uint64_t j = 0; j < table.counts.size(); ++j) {
        run = table.counts[j] > threshold ? run + 1 : 0;
        if (run == width)
            return j + 1 - width;
    }
    return std::nullopt;
}

GapSet collect(const RepTable& table, std::uint64_t k, Membership mode) {
    GapSet set{table.params, k, {}, false};
    const auto window = certified_window(table, k);
    const std::uint64_t end = window ? *window : table.counts.size();
    for (std::uint64_t j = 0; j < end; ++j)
        if (matches(table.counts[j], k, mode))
            set.elements.push_back(j);
    set.complete = window.has_value();
    return set;
}

GapSet enumerate(const Params& params, std::uint64_t k, Membership mode, std::optional<std::uint64_t> bound) {
    if (params.size() == 1) {
        const bool everything = single_coin_set_is_everything(k, mode);
        if (!bound) {
            if (everything)
                throw Error(ErrorKind::InfiniteSet, "every nonnegative integer has exactly one representation by " +
                                                        params.to_string());
            return GapSet{params, k, {}, true};
        }
        GapSet set{params, k, {}, !everything};
        if (everything)
            for (std::uint64_t j = 0; j <= *bound; ++j)
                set.elements.push_back(j);
        return set;
    }

    if (bound)
        return collect(rep_table(params, *bound), k, mode);

    const std::uint64_t ceiling = max_table_bound();
    std::uint64_t b = saturating_mul(saturating_mul(k + 1, params.smallest()), params.largest());
    for (;;) {
        if (b > ceiling)
            throw Error(ErrorKind::Indeterminate, "no certifying window for k=" + std::to_string(k) +
                                                      " below the bound ceiling " + std::to_string(ceiling));
        GapSet set = collect(rep_table(params, b, ceiling), k, mode);
        if (set.complete)
            return set;
        b = saturating_mul(b, 2);
    }
}

GapSet enumerate_exact_k(const Params& params, std::uint64_t k, std::optional<std::uint64_t> bound) {
    return enumerate(params, k, Membership::Exactly, bound);
}

GapSet enumerate_at_most_k(const Params& params, std::uint64_t k, std::optional<std::uint64_t> bound) {
    return enumerate(params, k, Membership::AtMost, bound);
}

OracleStats::OracleStats(const GapSet& set, unsigned m)
    : count_(make_int(set.elements.size())), power_sum_(0), m_(m), complete_(set.complete) {
    Int term;
    for (std::uint64_t j : set.elements) {
        mpz_ui_pow_ui(term.get_mpz_t(), j, m);
        power_sum_ += term;
    }
    if (!set.elements.empty())
        max_ = make_int(set.elements.back());
}

std::optional<Int> OracleStats::max() const {
    if (!complete_)
        throw Error(ErrorKind::IncompleteSet, "maximum requested of a set not certified complete");
    return max_;
}

OracleStats oracle_stats(const GapSet& set, unsigned m) { return OracleStats(set, m); }

StatReport oracle_statistic(const Params& params, Stat stat, std::uint64_t k, std::optional<unsigned> m) {
    const bool at_most = stat == Stat::MaxAtMost || stat == Stat::CountAtMost || stat == Stat::SumAtMost;
    const GapSet set = enumerate(params, k, at_most ? Membership::AtMost : Membership::Exactly);
    StatReport r{stat, params.values(), k, std::nullopt, std::nullopt, Provenance::Oracle};
    switch (stat) {
    case Stat::Max:
    case Stat::MaxAtMost:
        r.value = oracle_stats(set, 0).max();
        break;
    case Stat::Count:
    case Stat::CountAtMost:
        r.value = oracle_stats(set, 0).count();
        break;
    case Stat::Sum:
    case Stat::SumAtMost:
        r.value = oracle_stats(set, 1).power_sum();
        break;
    case Stat::PowerSum:
        r.m = m.value_or(1);
        r.value = oracle_stats(set, *r.m).power_sum();
        break;
    }
    return r;
}

Json to_json(const GapSet& set) {
    auto elements = Json::array();
    for (std::uint64_t e : set.elements)
        elements.push_back(std::to_string(e));
    return Json{
        {"params", set.params.values()},
        {"k", set.k},
        {"complete", set.complete},
        {"elements", std::move(elements)},
    };
}

GapSet gap_set_from_json(const Json& j) {
    const auto raw = j.at("params").get<std::vector<std::int64_t>>();
    GapSet set{validate_params(raw), j.at("k").get<std::uint64_t>(), {}, j.at("complete").get<bool>()};
    for (const auto& e : j.at("elements"))
        set.elements.push_back(std::stoull(e.get<std::string>()));
    return set;
}

} // namespace frob
