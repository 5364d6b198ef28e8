#include "doctest.h"

#include "brute_force.hpp"

#include "frobenius/closed_form.hpp"
#include "frobenius/error.hpp"
#include "frobenius/genfun.hpp"

#include <random>

using frob::Int;
using frob::IntPoly;
using frob::PairParams;

namespace {

std::vector<std::uint64_t> support(const IntPoly& p) {
    std::vector<std::uint64_t> s;
    for (const auto& [e, c] : p.terms())
        s.push_back(e);
    return s;
}

// h(z) by truncated series multiplication: take the semigroup indicator up
// to n and multiply by each (1 - z^a_i), keeping degrees <= n.
std::vector<Int> h_by_truncated_series(const std::vector<std::uint64_t>& coins, std::uint64_t n) {
    const auto counts = brute::rep_counts(coins, n);
    std::vector<Int> c(n + 1);
    for (std::uint64_t j = 0; j <= n; ++j)
        c[j] = counts[j] > 0 ? 1 : 0;
    for (auto a : coins)
        for (std::uint64_t j = n; j >= a; --j) {
            c[j] -= c[j - a];
            if (j == a)
                break;
        }
    return c;
}

frob::ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const frob::Error& e) {
        return e.kind();
    }
    FAIL("no frob::Error thrown");
    return frob::ErrorKind::Mismatch;
}

} // namespace

TEST_CASE("p_k_poly examples") {
    CHECK(frob::p_k_poly(PairParams(3, 5), 0).to_text() == "z + z^2 + z^4 + z^7");
    CHECK(frob::p_k_poly(PairParams(1, 1), 1) == IntPoly::constant(1));
    const auto p1 = frob::p_k_poly(PairParams(3, 5), 1);
    CHECK(p1.term_count() == 15);
    CHECK(p1.degree() == 22u);
    CHECK(frob::p_k_poly(PairParams(1, 7), 0).is_zero());
}

TEST_CASE("p_k_poly support, degree and value at one") {
    for (auto [a, b] : brute::coprime_pairs(20)) {
        const PairParams p(a, b);
        const auto counts = brute::rep_counts({a, b}, 6 * a * b);
        const auto p1 = frob::p_k_poly(p, 1);
        for (std::uint64_t k = 0; k <= 4; ++k) {
            const auto pk = frob::p_k_poly(p, k);
            for (const auto& [e, c] : pk.terms())
                CHECK(c == 1);
            CHECK(support(pk) == brute::members(counts, k));
            const auto g = frob::frobenius_k(p, k);
            if (pk.is_zero())
                CHECK(g.empty());
            else
                CHECK(g.value == frob::make_int(*pk.degree()));
            CHECK(pk.value_at_one() == frob::count_k(p, k).value);
            if (k >= 1)
                CHECK(pk == p1.shifted(a * b * (k - 1)));
        }
    }
}

TEST_CASE("exact-k classes partition the integers") {
    for (auto [a, b] : brute::coprime_pairs(9)) {
        const PairParams p(a, b);
        const std::uint64_t bound = 5 * a * b;
        const auto counts = brute::rep_counts({a, b}, bound);
        const std::uint64_t kmax = 4;
        std::vector<int> hits(bound + 1, 0);
        for (std::uint64_t k = 0; k <= kmax; ++k)
            for (auto e : support(frob::p_k_poly(p, k)))
                if (e <= bound)
                    ++hits[e];
        for (std::uint64_t j = 0; j <= bound; ++j)
            CHECK(hits[j] == (counts[j] <= kmax ? 1 : 0));
    }
}

TEST_CASE("s_k_indicator examples") {
    const auto s57 = frob::s_k_indicator(PairParams(5, 7), 0, 24);
    CHECK(s57.bits[23] == 0);
    CHECK(s57.bits[24] == 1);
    const auto s35 = frob::s_k_indicator(PairParams(3, 5), 1, 15);
    CHECK(s35.bits[15] == 1);
    CHECK(s35.to_bit_string() == "0000000000000001");
    CHECK(frob::s_k_indicator(PairParams(8, 9), 0, 0).bits == std::vector<std::uint8_t>{1});
    CHECK(frob::to_json(frob::s_k_indicator(PairParams(2, 3), 0, 4)).dump() ==
          R"({"params":[2,3],"k":0,"bound":4,"bits":[1,0,1,1,1]})");
}

TEST_CASE("s_k_indicator marks exactly the integers with more than k representations") {
    for (auto [a, b] : brute::coprime_pairs(20)) {
        const std::uint64_t bound = 5 * a * b;
        const auto counts = brute::rep_counts({a, b}, bound);
        for (std::uint64_t k = 0; k <= 4; ++k) {
            const auto ind = frob::s_k_indicator(PairParams(a, b), k, bound);
            REQUIRE(ind.bits.size() == bound + 1);
            for (std::uint64_t j = 0; j <= bound; ++j)
                CHECK(ind.bits[j] == (counts[j] > k ? 1 : 0));
            // beyond g_k everything is in S_k
            for (std::uint64_t j = (k + 1) * a * b - std::min((k + 1) * a * b, a + b) + 1; j <= bound; ++j)
                CHECK(ind.bits[j] == 1);
        }
    }
}

TEST_CASE("expand_series") {
    const std::vector<std::uint64_t> denoms{1};
    CHECK(frob::expand_series(IntPoly::constant(1), denoms, 4) == std::vector<Int>{1, 1, 1, 1});
    const std::vector<std::uint64_t> two_three{2, 3};
    // 1 / ((1 - z^2)(1 - z^3)) = 1 + z^2 + z^3 + z^4 + z^5 + 2 z^6 + ...
    CHECK(frob::expand_series(IntPoly::constant(1), two_three, 7) == std::vector<Int>{1, 0, 1, 1, 1, 1, 2});
}

TEST_CASE("numerator_h examples") {
    CHECK(frob::numerator_h(frob::validate_params({3, 5})) == IntPoly::one_minus_z_pow(15));
    CHECK(frob::numerator_h(frob::validate_params({1})) == IntPoly::constant(1));
    CHECK(frob::numerator_h(frob::validate_params({1, 1})) == IntPoly::one_minus_z_pow(1));
    CHECK(frob::numerator_h(frob::validate_params({2, 3, 5})) ==
          IntPoly::one_minus_z_pow(6) * IntPoly::one_minus_z_pow(5));
    CHECK(frob::numerator_h(frob::validate_params({1, 2, 3})) ==
          IntPoly::one_minus_z_pow(2) * IntPoly::one_minus_z_pow(3));

    const auto h357 = frob::numerator_h(frob::validate_params({3, 5, 7}));
    const auto trunc = h_by_truncated_series({3, 5, 7}, 60);
    CHECK(h357.degree() <= 3u + 5 + 7 + 4);
    CHECK(h357.dense(61) == trunc);
    CHECK(h357 == IntPoly{{0, 1}, {10, -1}, {12, -1}, {14, -1}, {17, 1}, {19, 1}});
}

TEST_CASE("numerator_h is 1 - z^ab for two coins") {
    for (auto [a, b] : brute::coprime_pairs(20))
        CHECK(frob::numerator_h(frob::validate_params({std::int64_t(a), std::int64_t(b)})) ==
              IntPoly::one_minus_z_pow(a * b));
}

TEST_CASE("numerator_h matches truncated series multiplication for random coin sets") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> n_dist(2, 4), a_dist(2, 15);
    int checked = 0;
    while (checked < 80) {
        std::vector<std::int64_t> raw(n_dist(rng));
        for (auto& v : raw)
            v = a_dist(rng);
        std::int64_t g = 0;
        for (auto v : raw)
            g = std::gcd(g, v);
        if (g != 1)
            continue;
        const auto params = frob::validate_params(raw);
        const auto h = frob::numerator_h(params);
        const std::uint64_t n = *h.degree() + 30;
        CHECK(h.dense(n + 1) == h_by_truncated_series(params.values(), n));
        ++checked;
    }
}

TEST_CASE("denham_term_count") {
    CHECK(frob::denham_term_count(frob::validate_params({2, 3, 5})) == 4);
    CHECK(frob::denham_term_count(frob::validate_params({1, 2, 3})) == 4);
    CHECK(frob::denham_term_count(frob::validate_params({3, 5, 7})) == 6);
    CHECK(frob::denham_term_count(frob::validate_params({4, 5, 6})) == 4);
    CHECK(kind_of([] { frob::denham_term_count(frob::validate_params({3, 5})); }) == frob::ErrorKind::WrongArity);
    // A redundant third generator equal to ab gives (1 - z^ab)^2, three terms.
    CHECK(frob::denham_term_count(frob::validate_params({2, 3, 6})) == 3);
}

TEST_CASE("denham dichotomy holds for pairwise coprime triples") {
    for (std::uint64_t a = 2; a <= 14; ++a)
        for (std::uint64_t b = a + 1; b <= 14; ++b)
            for (std::uint64_t c = b + 1; c <= 14; ++c) {
                if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
                    continue;
                const auto n = frob::denham_term_count(
                    frob::validate_params({std::int64_t(a), std::int64_t(b), std::int64_t(c)}));
                CHECK((n == 4 || n == 6));
            }
}

TEST_CASE("cyclotomic_identity_check") {
    CHECK(frob::cyclotomic_identity_check(PairParams(3, 5)));
    CHECK(frob::cyclotomic_identity_check(PairParams(2, 3)));
    CHECK(frob::cyclotomic_identity_check(PairParams(29, 23)));
    CHECK(kind_of([] { frob::cyclotomic_identity_check(PairParams(4, 3)); }) == frob::ErrorKind::NotPrime);
    CHECK(kind_of([] { frob::cyclotomic_identity_check(PairParams(1, 3)); }) == frob::ErrorKind::NotPrime);
    // (3,4): Phi_12 has degree 4, too small for (1 - z^12)(1 - z) / ((1 - z^3)(1 - z^4)) of degree 6.
    CHECK(frob::cyclotomic(12).degree() == 4u);
}
