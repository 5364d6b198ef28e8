#include "doctest.h"

#include "frobenius/rat_poly.hpp"

using frob::Int;
using frob::Rat;
using frob::RatPoly;

namespace {

RatPoly poly(std::initializer_list<const char*> coeffs) {
    std::vector<Rat> c;
    for (const char* s : coeffs)
        c.emplace_back(s);
    return RatPoly(std::move(c));
}

Int power_sum(unsigned e, unsigned x) {
    Int s = 0;
    for (unsigned j = 0; j < x; ++j)
        s += frob::pow_int(j, e);
    return s;
}

} // namespace

TEST_CASE("Bernoulli polynomials B_0..B_6 match the published table") {
    CHECK(frob::bernoulli_poly(0) == poly({"1"}));
    CHECK(frob::bernoulli_poly(1) == poly({"-1/2", "1"}));
    CHECK(frob::bernoulli_poly(2) == poly({"1/6", "-1", "1"}));
    CHECK(frob::bernoulli_poly(3) == poly({"0", "1/2", "-3/2", "1"}));
    CHECK(frob::bernoulli_poly(4) == poly({"-1/30", "0", "1", "-2", "1"}));
    CHECK(frob::bernoulli_poly(5) == poly({"0", "-1/6", "0", "5/3", "-5/2", "1"}));
    CHECK(frob::bernoulli_poly(6) == poly({"1/42", "0", "-1/2", "0", "5/2", "-3", "1"}));

    CHECK(frob::bernoulli_poly(2).to_text() == "x^2 - x + 1/6");
    CHECK(frob::bernoulli_poly(6).to_text() == "x^6 - 3 x^5 + 5/2 x^4 - 1/2 x^2 + 1/42");
}

TEST_CASE("Bernoulli numbers use B_1 = -1/2") {
    CHECK(frob::bernoulli_number(1) == Rat(-1, 2));
    CHECK(frob::bernoulli_number(12) == Rat(-691, 2730));
    CHECK(frob::bernoulli_poly(1)(Rat(0)) == Rat(-1, 2));
}

TEST_CASE("odd Bernoulli polynomials from B_3 on have no constant term") {
    for (unsigned n = 3; n <= 31; n += 2)
        CHECK(frob::bernoulli_poly(n).coeff(0) == 0);
}

TEST_CASE("beta examples") {
    CHECK(frob::beta_poly(1) == poly({"0", "1"}));
    CHECK(frob::beta_poly(2)(Int(3)) == 3);
    CHECK(frob::beta_poly(3)(Int(5)) == 30);
    CHECK(frob::beta_value(3, 5) == 30);
}

TEST_CASE("beta_k(x) sums (k-1)-th powers below x") {
    for (unsigned k = 1; k <= 8; ++k)
        for (unsigned x = 1; x <= 50; ++x)
            CHECK(frob::beta_value(k, x) == power_sum(k - 1, x));
    // and well outside 64-bit range
    CHECK(frob::beta_value(12, Int(1000)) == power_sum(11, 1000));
}
