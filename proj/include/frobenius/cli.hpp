#pragma once

#include "frobenius/json_types.hpp"
#include "frobenius/params.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frob {

/// One closed-form value compared against enumeration.
struct CheckFailure {
    std::string check;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t k = 0;
    std::optional<unsigned> m;
    std::string closed_form;
    std::string oracle;

    Json to_json() const;
};

struct VerifySummary {
    std::size_t pairs = 0;
    std::size_t checks = 0;
    std::size_t passed = 0;
    /// per-check counts of comparisons run, in a fixed key order
    std::map<std::string, std::size_t> by_check;
    /// first failure in (a, b, k, m) order
    std::optional<CheckFailure> first_failure;

    bool ok() const noexcept { return passed == checks; }
    Json to_json() const;
};

/// Coprime pairs a < b <= max_b, a >= 1, sorted by (a, b).
std::vector<PairParams> sweep_pairs(std::uint64_t max_b);

/// Closed forms against the oracle for every pair: g, c, s for k <= kmax,
/// s^m for m <= mmax, the at-most triple, p_k support, structured R_k and
/// h(z) = 1 - z^ab. Pairs are spread over `workers` threads; the summary
/// does not depend on the worker count.
VerifySummary verify_pairs(const std::vector<PairParams>& pairs, std::uint64_t kmax, unsigned mmax,
                           unsigned workers = 1);

/// Runs the command line `args` (without the program name). Returns the
/// process exit status: 0 ok, 1 mismatch, 2 invalid input, 3 unsupported,
/// 4 resource guard.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace frob
