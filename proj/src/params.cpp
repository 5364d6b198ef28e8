#include "frobenius/params.hpp"
#include "frobenius/error.hpp"

#include <algorithm>
#include <numeric>

namespace frob {

std::uint64_t Params::sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), std::uint64_t{0});
}

std::string Params::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(values_[i]);
    }
    return s;
}

Params validate_params(std::span<const std::int64_t> raw) {
    if (raw.empty())
        throw Error(ErrorKind::EmptyList, "no denominations given");
    std::vector<std::uint64_t> values;
    values.reserve(raw.size());
    std::uint64_t g = 0;
    for (std::int64_t v : raw) {
        if (v <= 0)
            throw Error(ErrorKind::NonPositive, std::to_string(v));
        values.push_back(static_cast<std::uint64_t>(v));
        g = std::gcd(g, values.back());
    }
    if (g != 1)
        throw Error(ErrorKind::NotCoprime, std::to_string(g));
    std::sort(values.begin(), values.end());
    return Params(std::move(values));
}

Params validate_params(std::initializer_list<std::int64_t> raw) {
    return validate_params(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

PairParams::PairParams(std::uint64_t a, std::uint64_t b) : a_(a), b_(b) {
    if (a == 0)
        throw Error(ErrorKind::NonPositive, "0");
    if (b == 0)
        throw Error(ErrorKind::NonPositive, "0");
    if (auto g = std::gcd(a, b); g != 1)
        throw Error(ErrorKind::NotCoprime, std::to_string(g));
}

PairParams::PairParams(const Params& params) : PairParams(1, 1) {
    if (params.size() != 2)
        throw Error(ErrorKind::WrongArity, "expected 2 denominations, got " + std::to_string(params.size()));
    a_ = params.values()[0];
    b_ = params.values()[1];
}

Params PairParams::params() const {
    return validate_params({static_cast<std::int64_t>(a_), static_cast<std::int64_t>(b_)});
}

} // namespace frob
