#include "frobenius/genfun.hpp"
#include "frobenius/error.hpp"
#include "frobenius/oracle.hpp"

#include <string>

namespace frob {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

IntPoly polynomial_of(const GapSet& set) {
    IntPoly p;
    for (std::uint64_t j : set.elements)
        p.add_term(j, 1);
    return p;
}

// bits[j] = [r(j) > 0] for 0 <= j <= bound
std::vector<std::uint8_t> semigroup_bits(const Params& params, std::uint64_t bound) {
    const RepTable table = rep_table(params, bound);
    std::vector<std::uint8_t> bits(table.counts.size());
    for (std::size_t j = 0; j < bits.size(); ++j)
        bits[j] = table.counts[j] > 0 ? 1 : 0;
    return bits;
}

bool series_is_indicator(const std::vector<Int>& series, const std::vector<std::uint8_t>& bits) {
    if (series.size() != bits.size())
        return false;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (series[j] != static_cast<unsigned long>(bits[j]))
            return false;
    return true;
}

} // namespace

IntPoly p_k_poly(const PairParams& p, std::uint64_t k) {
    IntPoly poly;
    if (k == 0) {
        poly = polynomial_of(enumerate_exact_k(p.params(), 0));
    } else {
        poly = (IntPoly::geometric(p.a(), p.b()) * IntPoly::geometric(p.b(), p.a())).shifted(p.ab() * (k - 1));
    }
    for (const auto& [e, c] : poly.terms())
        if (c != 1)
            throw Error(ErrorKind::Mismatch, "p_k has coefficient " + c.get_str() + " at z^" + std::to_string(e));
    return poly;
}

std::string IndicatorSeries::to_bit_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits)
        s.push_back(b ? '1' : '0');
    return s;
}

IndicatorSeries s_k_indicator(const PairParams& p, std::uint64_t k, std::uint64_t bound) {
    IndicatorSeries series{p.params(), k, bound, std::vector<std::uint8_t>(bound + 1, 0)};
    const std::uint64_t shift = p.ab() * k;
    if (shift > bound)
        return series;
    const auto base = semigroup_bits(series.params, bound - shift);
    for (std::uint64_t j = shift; j <= bound; ++j)
        series.bits[j] = base[j - shift];
    return series;
}

std::vector<Int> expand_series(const IntPoly& numer, std::span<const std::uint64_t> denominators,
                               std::size_t terms) {
    std::vector<Int> c = numer.dense(terms);
    // multiply by 1 / (1 - z^d) = 1 + z^d + z^{2d} + ...
    for (std::uint64_t d : denominators)
        for (std::size_t j = d; j < terms; ++j)
            c[j] += c[j - d];
    return c;
}

IntPoly numerator_h(const Params& params) {
    const auto& a = params.values();
    const GapSet gaps = enumerate_exact_k(params, 0);

    IntPoly tail = IntPoly::constant(1);
    for (std::size_t i = 1; i < a.size(); ++i)
        tail *= IntPoly::one_minus_z_pow(a[i]);
    const IntPoly full = IntPoly::one_minus_z_pow(a[0]) * tail;

    IntPoly h = IntPoly::geometric(1, a[0]) * tail - polynomial_of(gaps) * full;

    // g_0 + sum a_i, with g_0 = -1 for an empty gap set
    const std::uint64_t g0_plus_one = gaps.elements.empty() ? 0 : gaps.elements.back() + 1;
    const std::uint64_t top = g0_plus_one + params.sum() - 1;
    const auto series = expand_series(h, a, top + 1);
    if (!series_is_indicator(series, semigroup_bits(params, top)))
        throw Error(ErrorKind::Mismatch, "h(z) / prod(1 - z^a_i) disagrees with the semigroup of " +
                                             params.to_string());
    return h;
}

std::size_t denham_term_count(const Params& params) {
    if (params.size() != 3)
        throw Error(ErrorKind::WrongArity, "expected 3 denominations, got " + std::to_string(params.size()));
    return numerator_h(params).term_count();
}

bool cyclotomic_identity_check(const PairParams& p) {
    if (!is_prime(p.a()) || !is_prime(p.b()) || p.a() == p.b())
        throw Error(ErrorKind::NotPrime, "(" + std::to_string(p.a()) + "," + std::to_string(p.b()) + ")");

    const IntPoly phi = cyclotomic(p.ab());
    const IntPoly lhs = phi * IntPoly::one_minus_z_pow(p.a()) * IntPoly::one_minus_z_pow(p.b());
    const IntPoly rhs = IntPoly::one_minus_z_pow(p.ab()) * IntPoly::one_minus_z_pow(1);
    if (lhs != rhs)
        return false;

    const std::uint64_t top = p.ab() - p.a() - p.b() + 1;  // g_0 + 1
    const std::uint64_t one = 1;
    const auto series = expand_series(phi, std::span(&one, 1), top + 1);
    return series_is_indicator(series, semigroup_bits(p.params(), top));
}

Json to_json(const IndicatorSeries& s) {
    return Json{
        {"params", s.params.values()},
        {"k", s.k},
        {"bound", s.bound},
        {"bits", s.bits},
    };
}

} // namespace frob
