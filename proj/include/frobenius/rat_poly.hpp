#pragma once

#include "frobenius/bigint.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace frob {

/// Dense univariate polynomial in x with exact rational coefficients;
/// index i holds the coefficient of x^i.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);

    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    Rat coeff(std::size_t i) const;

    Rat operator()(const Rat& x) const;
    /// Value at an integer point; stays a Rat since coefficients are rational.
    Rat operator()(const Int& x) const { return (*this)(Rat(x)); }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    /// Decreasing powers, e.g. "x^2 - x + 1/6".
    std::string to_text() const;

private:
    void trim();

    std::vector<Rat> coeffs_;
};

/// Bernoulli number B_n with the convention B_1 = -1/2.
Rat bernoulli_number(unsigned n);

/// B_n(x) from z e^{xz} / (e^z - 1) = sum_n B_n(x) z^n / n!.
RatPoly bernoulli_poly(unsigned n);

/// beta_k(x) = (B_k(x) - B_k(0)) / k; at a positive integer x this is
/// sum_{j=0}^{x-1} j^{k-1}. Requires k >= 1.
RatPoly beta_poly(unsigned k);

/// beta_k evaluated at a nonnegative integer; always integral there.
Int beta_value(unsigned k, const Int& x);

} // namespace frob
