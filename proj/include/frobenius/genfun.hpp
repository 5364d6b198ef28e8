#pragma once

#include "frobenius/int_poly.hpp"
#include "frobenius/params.hpp"

#include "frobenius/json_types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frob {

/// sum_{j in R_k(a,b)} z^j. For k >= 1 this is the product
/// z^{ab(k-1)} (1 + z^a + ... + z^{(b-1)a}) (1 + z^b + ... + z^{(a-1)b});
/// for k = 0 it is assembled from the oracle's gap set.
IntPoly p_k_poly(const PairParams& p, std::uint64_t k);

/// bits[j] == 1 iff j has more than k representations, 0 <= j <= bound.
struct IndicatorSeries {
    Params params;
    std::uint64_t k = 0;
    std::uint64_t bound = 0;
    std::vector<std::uint8_t> bits;

    std::string to_bit_string() const;
};

/// S_k = abk + S_0, so bits_k[j] = bits_0[j - abk] for j >= abk and 0 below.
IndicatorSeries s_k_indicator(const PairParams& p, std::uint64_t k, std::uint64_t bound);

/// Coefficients 0..terms-1 of numer / prod_i (1 - z^{d_i}) as a power series.
std::vector<Int> expand_series(const IntPoly& numer, std::span<const std::uint64_t> denominators,
                               std::size_t terms);

/// h(z) with sum_{j in S_0} z^j = h(z) / prod_i (1 - z^{a_i}), computed as
///   (1 + z + ... + z^{a_1 - 1}) prod_{i >= 2} (1 - z^{a_i}) - p_0(z) prod_i (1 - z^{a_i}).
/// The result is re-expanded up to degree g_0 + sum a_i and compared with
/// the oracle; a disagreement throws Error(Mismatch).
IntPoly numerator_h(const Params& params);

/// Number of nonzero terms of numerator_h for three denominations;
/// Error(WrongArity) otherwise.
std::size_t denham_term_count(const Params& params);

/// For distinct primes a, b: checks Phi_{ab}(z) (1 - z^a)(1 - z^b) = (1 - z^{ab})(1 - z)
/// and that the series of Phi_{ab}(z) / (1 - z) matches the oracle's S_0
/// indicator through degree g_0 + 1. Error(NotPrime) unless both are prime
/// and distinct.
bool cyclotomic_identity_check(const PairParams& p);

Json to_json(const IndicatorSeries& s);

} // namespace frob
