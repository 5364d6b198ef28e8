#include "frobenius/stat_report.hpp"

#include <stdexcept>
#include <string>

namespace frob {

std::string_view stat_name(Stat stat) noexcept {
    switch (stat) {
    case Stat::Max: return "g";
    case Stat::Count: return "c";
    case Stat::Sum: return "s";
    case Stat::PowerSum: return "s^m";
    case Stat::MaxAtMost: return "g<=";
    case Stat::CountAtMost: return "c<=";
    case Stat::SumAtMost: return "s<=";
    }
    return "?";
}

std::optional<Stat> parse_stat(std::string_view name) noexcept {
    for (Stat s : {Stat::Max, Stat::Count, Stat::Sum, Stat::PowerSum, Stat::MaxAtMost, Stat::CountAtMost,
                   Stat::SumAtMost})
        if (name == stat_name(s))
            return s;
    if (name == "sm")
        return Stat::PowerSum;
    if (name == "g_le")
        return Stat::MaxAtMost;
    if (name == "c_le")
        return Stat::CountAtMost;
    if (name == "s_le")
        return Stat::SumAtMost;
    return std::nullopt;
}

std::string_view provenance_name(Provenance p) noexcept {
    return p == Provenance::ClosedForm ? "closed-form" : "oracle";
}

Json to_json(const StatReport& r) {
    Json j;
    j["stat"] = std::string(stat_name(r.stat));
    if (r.params.size() == 2) {
        j["a"] = r.params[0];
        j["b"] = r.params[1];
    } else {
        j["params"] = r.params;
    }
    j["k"] = r.k;
    if (r.m)
        j["m"] = *r.m;
    if (r.value) {
        j["value"] = r.value->get_str();
    } else {
        j["value"] = "-1";
        j["empty"] = true;
    }
    j["provenance"] = std::string(provenance_name(r.provenance));
    return j;
}

StatReport stat_report_from_json(const Json& j) {
    const auto name = j.at("stat").get<std::string>();
    const auto stat = parse_stat(name);
    if (!stat)
        throw std::invalid_argument("unknown statistic '" + name + "'");
    StatReport r{*stat, {}, j.at("k").get<std::uint64_t>(), std::nullopt, std::nullopt, Provenance::ClosedForm};
    if (j.contains("params"))
        r.params = j.at("params").get<std::vector<std::uint64_t>>();
    else
        r.params = {j.at("a").get<std::uint64_t>(), j.at("b").get<std::uint64_t>()};
    if (j.contains("m"))
        r.m = j.at("m").get<unsigned>();
    if (!j.value("empty", false))
        r.value = parse_int(j.at("value").get<std::string>());
    const auto prov = j.at("provenance").get<std::string>();
    if (prov == "oracle")
        r.provenance = Provenance::Oracle;
    else if (prov != "closed-form")
        throw std::invalid_argument("unknown provenance '" + prov + "'");
    return r;
}

} // namespace frob
