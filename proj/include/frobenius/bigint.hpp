#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace frob {

using Int = mpz_class;
using Rat = mpq_class;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 target expected");

inline Int make_int(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

/// Parses a base-10 integer; throws std::invalid_argument on malformed input.
Int parse_int(const std::string& text);

} // namespace frob
