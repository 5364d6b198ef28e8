#pragma once

#include "frobenius/oracle.hpp"
#include "frobenius/params.hpp"
#include "frobenius/stat_report.hpp"

#include <cstdint>

namespace frob {

/// g_k(a,b) = (k+1)ab - a - b. When that is negative (only for a unit coin
/// and k = 0) the set is empty and the report carries no value.
StatReport frobenius_k(const PairParams& p, std::uint64_t k);

/// c_0 = (a-1)(b-1)/2, c_k = ab for k >= 1.
StatReport count_k(const PairParams& p, std::uint64_t k);

/// s_0 = (a-1)(b-1)(2ab-a-b-1)/12, s_k = ab(2abk-a-b)/2 for k >= 1.
StatReport sum_k(const PairParams& p, std::uint64_t k);

/// s_k^m as a multinomial sum over lambda + mu + nu = m of
///   a^{lambda+mu} b^{lambda+nu} (k-1)^lambda beta_{nu+1}(a) beta_{mu+1}(b),
/// with 0^0 = 1. For k = 0 only m <= 1 is available (c_0, s_0); larger m
/// throws Error(UnsupportedK).
StatReport power_sum_k(const PairParams& p, std::uint64_t k, unsigned m);

struct AtMostStats {
    StatReport max;
    StatReport count;
    StatReport sum;
};

/// g_{<=k}, c_{<=k}, s_{<=k}.
AtMostStats at_most_stats(const PairParams& p, std::uint64_t k);

/// R_k = ab(k-1) + {0, a, ..., (b-1)a} + {0, b, ..., (a-1)b} for k >= 1.
/// Throws Error(Mismatch) if two of the ab sums coincide.
GapSet structured_R_k(const PairParams& p, std::uint64_t k);

} // namespace frob
