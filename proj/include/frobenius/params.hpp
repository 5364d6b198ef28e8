#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frob {

/// Coin denominations a_1 <= ... <= a_n, all positive, overall gcd 1.
/// Repeated values are kept: they change representation counts.
class Params {
public:
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::uint64_t smallest() const noexcept { return values_.front(); }
    std::uint64_t largest() const noexcept { return values_.back(); }
    std::uint64_t sum() const noexcept;
    std::string to_string() const;

    friend bool operator==(const Params&, const Params&) = default;
    friend auto operator<=>(const Params&, const Params&) = default;

private:
    explicit Params(std::vector<std::uint64_t> values) : values_(std::move(values)) {}
    friend Params validate_params(std::span<const std::int64_t> raw);

    std::vector<std::uint64_t> values_;
};

/// Throws Error(EmptyList | NonPositive | NotCoprime); the detail names the datum.
Params validate_params(std::span<const std::int64_t> raw);
Params validate_params(std::initializer_list<std::int64_t> raw);

/// Two coprime positive integers, in the order given.
class PairParams {
public:
    /// Throws Error(NonPositive | NotCoprime).
    PairParams(std::uint64_t a, std::uint64_t b);
    /// Throws Error(WrongArity) unless params has exactly two entries.
    explicit PairParams(const Params& params);

    std::uint64_t a() const noexcept { return a_; }
    std::uint64_t b() const noexcept { return b_; }
    std::uint64_t ab() const noexcept { return a_ * b_; }
    Params params() const;

    friend bool operator==(const PairParams&, const PairParams&) = default;

private:
    std::uint64_t a_;
    std::uint64_t b_;
};

} // namespace frob
