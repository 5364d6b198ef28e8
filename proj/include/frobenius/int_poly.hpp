#pragma once

#include "frobenius/bigint.hpp"

#include "frobenius/json_types.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace frob {

/// Sparse univariate polynomial in z with arbitrary-precision integer
/// coefficients. Only nonzero coefficients are stored.
class IntPoly {
public:
    using Exponent = std::uint64_t;
    using Terms = std::map<Exponent, Int>;

    IntPoly() = default;
    IntPoly(std::initializer_list<std::pair<Exponent, long>> terms);

    static IntPoly constant(const Int& c);
    static IntPoly monomial(Exponent e, const Int& c = 1);
    /// 1 - z^e
    static IntPoly one_minus_z_pow(Exponent e);
    /// 1 + z^step + z^{2 step} + ... + z^{(count-1) step}
    static IntPoly geometric(Exponent step, std::uint64_t count);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    /// nullopt for the zero polynomial.
    std::optional<Exponent> degree() const;
    Int coeff(Exponent e) const;
    /// Sum of coefficients, i.e. the value at z = 1.
    Int value_at_one() const;

    /// Adds c z^e, dropping the term if it cancels.
    void add_term(Exponent e, const Int& c);
    IntPoly shifted(Exponent by) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    IntPoly operator-() const;
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Dense coefficients 0..n-1 of the power series of this polynomial.
    std::vector<Int> dense(std::size_t n) const;

    /// Canonical text, increasing exponents: "1 - z^7 + z^15", "0" for zero.
    std::string to_text() const;

private:
    Terms terms_;
};

IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

/// Returns q with q * d == p; throws Error(NotDivisible) otherwise and
/// Error(Mismatch) for d == 0.
IntPoly poly_exact_div(const IntPoly& p, const IntPoly& d);

/// Phi_n(z) via Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d.
IntPoly cyclotomic(std::uint64_t n);

/// {"terms": [[exp, "coeff"], ...]}
Json to_json(const IntPoly& p);
IntPoly int_poly_from_json(const Json& j);

} // namespace frob
