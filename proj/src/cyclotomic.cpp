#include "frobenius/int_poly.hpp"

#include <stdexcept>
#include <unordered_map>

namespace frob {

namespace {

IntPoly cyclotomic_memo(std::uint64_t n, std::unordered_map<std::uint64_t, IntPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    // z^n - 1
    IntPoly numer = IntPoly::monomial(n);
    numer.add_term(0, -1);
    IntPoly denom = IntPoly::constant(1);
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0)
            denom *= cyclotomic_memo(d, memo);
    IntPoly phi = poly_exact_div(numer, denom);
    memo.emplace(n, phi);
    return phi;
}

} // namespace

IntPoly cyclotomic(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("cyclotomic index must be positive");
    std::unordered_map<std::uint64_t, IntPoly> memo;
    return cyclotomic_memo(n, memo);
}

} // namespace frob
