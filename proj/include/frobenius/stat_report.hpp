#pragma once

#include "frobenius/bigint.hpp"
#include "frobenius/params.hpp"

#include "frobenius/json_types.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace frob {

enum class Stat {
    Max,          // g_k
    Count,        // c_k
    Sum,          // s_k
    PowerSum,     // s_k^m
    MaxAtMost,    // g_{<=k}
    CountAtMost,  // c_{<=k}
    SumAtMost,    // s_{<=k}
};

enum class Provenance { ClosedForm, Oracle };

/// Wire names: "g", "c", "s", "s^m", "g<=", "c<=", "s<=".
std::string_view stat_name(Stat stat) noexcept;
/// Accepts the wire names plus the shell-friendly aliases sm, g_le, c_le, s_le.
std::optional<Stat> parse_stat(std::string_view name) noexcept;
std::string_view provenance_name(Provenance p) noexcept;

/// One exact statistic. An absent value means the statistic of an empty set.
struct StatReport {
    Stat stat;
    std::vector<std::uint64_t> params;
    std::uint64_t k = 0;
    std::optional<unsigned> m;
    std::optional<Int> value;
    Provenance provenance = Provenance::ClosedForm;

    bool empty() const noexcept { return !value.has_value(); }

    friend bool operator==(const StatReport&, const StatReport&) = default;
};

/// Two-parameter reports use "a"/"b" keys, other arities a "params" array.
/// An empty maximum is written as "value":"-1" together with "empty":true.
Json to_json(const StatReport& r);
StatReport stat_report_from_json(const Json& j);

} // namespace frob
