#include "frobenius/cli.hpp"
#include "frobenius/closed_form.hpp"
#include "frobenius/error.hpp"
#include "frobenius/genfun.hpp"
#include "frobenius/oracle.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace frob {

// ---------------------------------------------------------------------------
// verification sweep

namespace {

struct PairResult {
    std::size_t checks = 0;
    std::size_t passed = 0;
    std::map<std::string, std::size_t> by_check;
    std::optional<CheckFailure> first_failure;

    void record(const PairParams& p, const std::string& check, std::uint64_t k, std::optional<unsigned> m,
                const std::string& closed, const std::string& oracle) {
        ++checks;
        ++by_check[check];
        if (closed == oracle) {
            ++passed;
        } else if (!first_failure) {
            first_failure = CheckFailure{check, p.a(), p.b(), k, m, closed, oracle};
        }
    }
};

std::string show(const std::optional<Int>& v) { return v ? v->get_str() : std::string("empty"); }

std::string show_elements(const std::vector<std::uint64_t>& elements) {
    std::string s = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(elements[i]);
    }
    return s + "}";
}

std::vector<std::uint64_t> support_of(const IntPoly& poly) {
    std::vector<std::uint64_t> s;
    for (const auto& [e, c] : poly.terms())
        s.push_back(e);
    return s;
}

PairResult verify_pair(const PairParams& p, std::uint64_t kmax, unsigned mmax) {
    PairResult res;
    // Past (kmax + 1) ab every count exceeds kmax, so one table serves all k.
    const RepTable table = rep_table(p.params(), (kmax + 2) * p.ab());

    std::optional<std::string> broken;
    for (std::uint64_t k = 0; k <= kmax; ++k) {
        const GapSet exact = collect(table, k, Membership::Exactly);
        const GapSet at_most = collect(table, k, Membership::AtMost);
        if (!exact.complete || !at_most.complete)
            throw Error(ErrorKind::Mismatch, "oracle table too short for " + p.params().to_string());

        const OracleStats exact_stats = oracle_stats(exact, 1);
        res.record(p, "g", k, {}, show(frobenius_k(p, k).value), show(exact_stats.max()));
        res.record(p, "c", k, {}, show(count_k(p, k).value), exact_stats.count().get_str());
        res.record(p, "s", k, {}, show(sum_k(p, k).value), exact_stats.power_sum().get_str());

        for (unsigned m = 0; m <= mmax; ++m) {
            if (k == 0 && m >= 2)
                break;
            res.record(p, "s^m", k, m, show(power_sum_k(p, k, m).value),
                       oracle_stats(exact, m).power_sum().get_str());
        }

        const AtMostStats le = at_most_stats(p, k);
        const OracleStats le_stats = oracle_stats(at_most, 1);
        res.record(p, "g<=", k, {}, show(le.max.value), show(le_stats.max()));
        res.record(p, "c<=", k, {}, show(le.count.value), le_stats.count().get_str());
        res.record(p, "s<=", k, {}, show(le.sum.value), le_stats.power_sum().get_str());
        res.record(p, "g<=_is_g", k, {}, show(le.max.value), show(frobenius_k(p, k).value));

        res.record(p, "p_k", k, {}, show_elements(support_of(p_k_poly(p, k))), show_elements(exact.elements));
        if (k >= 1)
            res.record(p, "R_k", k, {}, show_elements(structured_R_k(p, k).elements),
                       show_elements(exact.elements));
    }
    res.record(p, "h", 0, {}, numerator_h(p.params()).to_text(), IntPoly::one_minus_z_pow(p.ab()).to_text());
    return res;
}

} // namespace

Json CheckFailure::to_json() const {
    Json j;
    j["check"] = check;
    j["a"] = a;
    j["b"] = b;
    j["k"] = k;
    if (m)
        j["m"] = *m;
    j["closed_form"] = closed_form;
    j["oracle"] = oracle;
    return j;
}

Json VerifySummary::to_json() const {
    Json j;
    j["pairs"] = pairs;
    j["checks"] = checks;
    j["passed"] = passed;
    j["failed"] = checks - passed;
    Json per = Json::object();
    for (const auto& [name, n] : by_check)
        per[name] = n;
    j["by_check"] = std::move(per);
    if (first_failure)
        j["counterexample"] = first_failure->to_json();
    return j;
}

std::vector<PairParams> sweep_pairs(std::uint64_t max_b) {
    std::vector<PairParams> pairs;
    for (std::uint64_t a = 1; a <= max_b; ++a)
        for (std::uint64_t b = a + 1; b <= max_b; ++b)
            if (std::gcd(a, b) == 1)
                pairs.emplace_back(a, b);
    return pairs;
}

VerifySummary verify_pairs(const std::vector<PairParams>& pairs, std::uint64_t kmax, unsigned mmax,
                           unsigned workers) {
    std::vector<PairResult> results(pairs.size());
    std::vector<std::optional<Error>> errors(pairs.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();) {
            try {
                results[i] = verify_pair(pairs[i], kmax, mmax);
            } catch (const Error& e) {
                errors[i] = e;
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, pairs.size()))));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work);
        work();
    }

    // Report in (a, b) order regardless of which worker finished first.
    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::pair(pairs[x].a(), pairs[x].b()) < std::pair(pairs[y].a(), pairs[y].b());
    });

    VerifySummary summary;
    summary.pairs = pairs.size();
    for (std::size_t i : order) {
        if (errors[i])
            throw *errors[i];
        const PairResult& r = results[i];
        summary.checks += r.checks;
        summary.passed += r.passed;
        for (const auto& [name, n] : r.by_check)
            summary.by_check[name] += n;
        if (!summary.first_failure && r.first_failure)
            summary.first_failure = r.first_failure;
    }
    return summary;
}

// ---------------------------------------------------------------------------
// command line

namespace {

struct Options {
    std::vector<std::int64_t> params;
    std::optional<std::uint64_t> k;
    std::optional<unsigned> m;
    std::optional<std::uint64_t> bound;
    std::string stat;
    std::string format;
    unsigned workers = 1;
    bool oracle = false;
    bool at_most = false;
    bool numerator = false;
    bool indicator = false;
    bool denham = false;
    std::optional<std::uint64_t> cyclotomic_index;
    std::optional<std::uint64_t> sweep;
    std::uint64_t kmax = 5;
    unsigned mmax = 4;
};

enum class Format { Json, Csv, Plain };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& name) {
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    if (name == "plain" || name == "text")
        return Format::Plain;
    throw UsageError("unknown format '" + name + "'");
}

std::string join(const std::vector<std::uint64_t>& values, char sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(values[i]);
    }
    return s;
}

StatReport closed_form_report(const PairParams& p, Stat stat, std::uint64_t k, std::optional<unsigned> m) {
    switch (stat) {
    case Stat::Max: return frobenius_k(p, k);
    case Stat::Count: return count_k(p, k);
    case Stat::Sum: return sum_k(p, k);
    case Stat::PowerSum: return power_sum_k(p, k, *m);
    case Stat::MaxAtMost: return at_most_stats(p, k).max;
    case Stat::CountAtMost: return at_most_stats(p, k).count;
    case Stat::SumAtMost: return at_most_stats(p, k).sum;
    }
    throw UsageError("unknown statistic");
}

int cmd_compute(const Options& o, std::ostream& out) {
    const Params params = validate_params(o.params);
    const auto stat = parse_stat(o.stat);
    if (!stat)
        throw UsageError("unknown statistic '" + o.stat + "' (expected g, c, s, sm, g_le, c_le or s_le)");
    if (*stat == Stat::PowerSum && !o.m)
        throw UsageError("--stat sm needs --m");
    const std::uint64_t k = o.k.value_or(0);

    const bool closed = params.size() == 2 && !o.oracle;
    const StatReport r = closed ? closed_form_report(PairParams(params), *stat, k, o.m)
                                : oracle_statistic(params, *stat, k, o.m);

    switch (parse_format(o.format.empty() ? "json" : o.format)) {
    case Format::Json:
        out << to_json(r).dump() << '\n';
        break;
    case Format::Csv:
        out << "stat,params,k,m,value,empty,provenance\n"
            << stat_name(r.stat) << ",\"" << join(r.params, ',') << "\"," << r.k << ','
            << (r.m ? std::to_string(*r.m) : "") << ',' << (r.value ? r.value->get_str() : "-1") << ','
            << (r.empty() ? "true" : "false") << ',' << provenance_name(r.provenance) << '\n';
        break;
    case Format::Plain:
        out << (r.value ? r.value->get_str() : "-1 (empty)") << '\n';
        break;
    }
    return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const Params params = validate_params(o.params);
    const GapSet set = enumerate(params, o.k.value_or(0), o.at_most ? Membership::AtMost : Membership::Exactly,
                                 o.bound);
    switch (parse_format(o.format.empty() ? "json" : o.format)) {
    case Format::Json:
        out << to_json(set).dump() << '\n';
        break;
    case Format::Csv:
        for (auto e : set.elements)
            out << e << '\n';
        break;
    case Format::Plain:
        out << join(set.elements, ' ') << '\n'
            << set.elements.size() << " elements" << (set.complete ? ", complete" : ", not certified complete")
            << '\n';
        break;
    }
    return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const Params params = validate_params(o.params);
    if (!o.bound)
        throw UsageError("classify needs --bound");
    const RepTable table = rep_table(params, *o.bound);
    const Format fmt = parse_format(o.format.empty() ? "csv" : o.format);
    if (fmt == Format::Json) {
        Json rows = Json::array();
        for (std::uint64_t j = 0; j < table.counts.size(); ++j) {
            const std::string c = table.counts[j].get_str();
            rows.push_back(Json{{"j", j}, {"count", c}, {"k", c}});
        }
        out << Json{{"params", params.values()}, {"rows", std::move(rows)}}.dump() << '\n';
        return 0;
    }
    if (fmt == Format::Csv)
        out << "j,count,k\n";
    for (std::uint64_t j = 0; j < table.counts.size(); ++j) {
        const std::string c = table.counts[j].get_str();
        if (fmt == Format::Csv)
            out << j << ',' << c << ',' << c << '\n';
        else
            out << j << ": " << c << (c == "0" ? " (gap)" : "") << '\n';
    }
    return 0;
}

int cmd_genfun(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format.empty() ? "plain" : o.format);
    auto emit = [&](const IntPoly& poly) {
        if (fmt == Format::Json)
            out << to_json(poly).dump() << '\n';
        else
            out << poly.to_text() << '\n';
    };

    if (o.cyclotomic_index) {
        if (*o.cyclotomic_index == 0)
            throw Error(ErrorKind::NonPositive, "0");
        emit(cyclotomic(*o.cyclotomic_index));
        return 0;
    }
    const Params params = validate_params(o.params);
    if (o.denham) {
        const auto n = denham_term_count(params);
        if (fmt == Format::Json)
            out << Json{{"params", params.values()}, {"terms", n}}.dump() << '\n';
        else
            out << n << '\n';
        return 0;
    }
    if (o.numerator) {
        emit(numerator_h(params));
        return 0;
    }
    if (o.indicator) {
        if (!o.bound)
            throw UsageError("--indicator needs --bound");
        const IndicatorSeries s = s_k_indicator(PairParams(params), o.k.value_or(0), *o.bound);
        if (fmt == Format::Json)
            out << to_json(s).dump() << '\n';
        else
            out << s.to_bit_string() << '\n';
        return 0;
    }
    if (!o.k)
        throw UsageError("genfun needs one of --k, --numerator, --indicator, --denham, --cyclotomic");
    emit(p_k_poly(PairParams(params), *o.k));
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<PairParams> pairs;
    if (o.sweep) {
        pairs = sweep_pairs(*o.sweep);
    } else {
        pairs.emplace_back(validate_params(o.params));
    }
    const VerifySummary summary = verify_pairs(pairs, o.kmax, o.mmax, o.workers);
    const Format fmt = parse_format(o.format.empty() ? "json" : o.format);
    if (fmt == Format::Plain) {
        out << summary.passed << "/" << summary.checks << " checks passed over " << summary.pairs << " pairs\n";
        for (const auto& [name, n] : summary.by_check)
            out << "  " << name << ": " << n << '\n';
        if (summary.first_failure)
            out << "counterexample: " << summary.first_failure->to_json().dump() << '\n';
    } else {
        out << summary.to_json().dump() << '\n';
    }
    return summary.ok() ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--params", o.params, "coin denominations, comma separated")->delimiter(',');
    cmd->add_option("--format", o.format, "json | csv | plain");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frobenius coin-exchange invariants: closed forms and brute-force enumeration", "frobenius"};
    app.require_subcommand(1);
    Options o;

    auto* compute = app.add_subcommand("compute", "one statistic (g, c, s, sm, g_le, c_le, s_le)");
    add_common(compute, o);
    compute->add_option("--k", o.k, "number of representations");
    compute->add_option("--m", o.m, "exponent for sm");
    compute->add_option("--stat", o.stat, "statistic")->required();
    compute->add_flag("--oracle", o.oracle, "compute by enumeration even for two coins");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "elements with exactly (or at most) k representations");
    add_common(enumerate_cmd, o);
    enumerate_cmd->add_option("--k", o.k, "number of representations");
    enumerate_cmd->add_flag("--at-most", o.at_most, "at most k instead of exactly k");
    enumerate_cmd->add_option("--bound", o.bound, "only integers up to this bound");

    auto* classify = app.add_subcommand("classify", "representation count of every j up to --bound");
    add_common(classify, o);
    classify->add_option("--bound", o.bound, "largest j")->required();

    auto* genfun = app.add_subcommand("genfun", "generating-function polynomials");
    add_common(genfun, o);
    genfun->add_option("--k", o.k, "p_k for two coins");
    genfun->add_flag("--numerator", o.numerator, "numerator h(z) of the semigroup series");
    genfun->add_flag("--indicator", o.indicator, "0/1 indicator of S_k up to --bound");
    genfun->add_option("--bound", o.bound, "indicator length");
    genfun->add_flag("--denham", o.denham, "number of terms of h(z) for three coins");
    genfun->add_option("--cyclotomic", o.cyclotomic_index, "cyclotomic polynomial Phi_N");

    auto* verify = app.add_subcommand("verify", "closed forms against enumeration");
    add_common(verify, o);
    verify->add_option("--sweep", o.sweep, "all coprime pairs a < b <= N");
    verify->add_option("--kmax", o.kmax, "largest k")->capture_default_str();
    verify->add_option("--mmax", o.mmax, "largest power-sum exponent")->capture_default_str();
    verify->add_option("--workers", o.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*compute)
            return cmd_compute(o, out);
        if (*enumerate_cmd)
            return cmd_enumerate(o, out);
        if (*classify)
            return cmd_classify(o, out);
        if (*genfun)
            return cmd_genfun(o, out);
        return cmd_verify(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.kind() == ErrorKind::UnsupportedK)
            err << "hint: pass --oracle to compute it by enumeration\n";
        return exit_code_for(e.kind());
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace frob
