#include "frobenius/closed_form.hpp"
#include "frobenius/error.hpp"
#include "frobenius/rat_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace frob {

namespace {

Int divide_exactly(const Int& numer, unsigned long denom, const char* what) {
    Int q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), numer.get_mpz_t(), denom);
    if (r != 0)
        throw Error(ErrorKind::Mismatch, std::string(what) + " is not integral");
    return q;
}

StatReport report(const PairParams& p, Stat stat, std::uint64_t k, Int value) {
    return StatReport{stat, {p.a(), p.b()}, k, std::nullopt, std::move(value), Provenance::ClosedForm};
}

// (k+1)ab - a - b, or nothing when negative. Negative happens only with a
// unit coin and k = 0, where every integer is representable; the oracle is
// asked to confirm the set really is empty.
std::optional<Int> largest_with_at_most_k(const PairParams& p, std::uint64_t k) {
    const Int a = make_int(p.a()), b = make_int(p.b());
    Int g = make_int(k + 1) * a * b - a - b;
    if (g >= 0)
        return g;
    if (!enumerate_exact_k(p.params(), k).elements.empty())
        throw Error(ErrorKind::Mismatch, "negative g_" + std::to_string(k) + " but R_k is not empty");
    return std::nullopt;
}

} // namespace

StatReport frobenius_k(const PairParams& p, std::uint64_t k) {
    StatReport r = report(p, Stat::Max, k, 0);
    r.value = largest_with_at_most_k(p, k);
    return r;
}

StatReport count_k(const PairParams& p, std::uint64_t k) {
    const Int a = make_int(p.a()), b = make_int(p.b());
    if (k == 0)
        return report(p, Stat::Count, k, divide_exactly((a - 1) * (b - 1), 2, "c_0"));
    return report(p, Stat::Count, k, a * b);
}

StatReport sum_k(const PairParams& p, std::uint64_t k) {
    const Int a = make_int(p.a()), b = make_int(p.b());
    if (k == 0)
        return report(p, Stat::Sum, k, divide_exactly((a - 1) * (b - 1) * (2 * a * b - a - b - 1), 12, "s_0"));
    return report(p, Stat::Sum, k, divide_exactly(a * b * (2 * a * b * make_int(k) - a - b), 2, "s_k"));
}

StatReport power_sum_k(const PairParams& p, std::uint64_t k, unsigned m) {
    if (k == 0) {
        if (m >= 2)
            throw Error(ErrorKind::UnsupportedK,
                        "no closed form for s_0^" + std::to_string(m) + "; use the oracle");
        StatReport r = m == 0 ? count_k(p, 0) : sum_k(p, 0);
        r.stat = Stat::PowerSum;
        r.m = m;
        return r;
    }

    const Int a = make_int(p.a()), b = make_int(p.b());
    const Int shift = make_int(k - 1);
    // beta_{i+1}(a) and beta_{i+1}(b) for i = 0..m
    std::vector<Int> beta_a(m + 1), beta_b(m + 1);
    for (unsigned i = 0; i <= m; ++i) {
        beta_a[i] = beta_value(i + 1, a);
        beta_b[i] = beta_value(i + 1, b);
    }

    Int m_fact, l_fact, mu_fact, nu_fact;
    mpz_fac_ui(m_fact.get_mpz_t(), m);
    Int total = 0;
    for (unsigned lambda = 0; lambda <= m; ++lambda)
        for (unsigned mu = 0; lambda + mu <= m; ++mu) {
            const unsigned nu = m - lambda - mu;
            mpz_fac_ui(l_fact.get_mpz_t(), lambda);
            mpz_fac_ui(mu_fact.get_mpz_t(), mu);
            mpz_fac_ui(nu_fact.get_mpz_t(), nu);
            const Int multinomial = m_fact / (l_fact * mu_fact * nu_fact);
            // pow_int gives 0^0 = 1, the k = 1, lambda = 0 term.
            total += multinomial * pow_int(a, lambda + mu) * pow_int(b, lambda + nu) * pow_int(shift, lambda) *
                     beta_a[nu] * beta_b[mu];
        }

    StatReport r = report(p, Stat::PowerSum, k, total);
    r.m = m;
    return r;
}

AtMostStats at_most_stats(const PairParams& p, std::uint64_t k) {
    const Int a = make_int(p.a()), b = make_int(p.b()), kk = make_int(k);
    const Int ab = a * b;

    StatReport g = report(p, Stat::MaxAtMost, k, 0);
    g.value = largest_with_at_most_k(p, k);

    StatReport c = report(p, Stat::CountAtMost, k, divide_exactly((a - 1) * (b - 1), 2, "c_<=k") + ab * kk);

    // 12 s = 6 a^2b^2k^2 + 6 (ab-a-b) ab k + 2 a^2b^2 - 3 (a+b-1) ab + (a^2+b^2-1)
    const Int twelve_s = 6 * ab * ab * kk * kk + 6 * (ab - a - b) * ab * kk + 2 * ab * ab - 3 * (a + b - 1) * ab +
                         (a * a + b * b - 1);
    StatReport s = report(p, Stat::SumAtMost, k, divide_exactly(twelve_s, 12, "s_<=k"));

    return AtMostStats{std::move(g), std::move(c), std::move(s)};
}

GapSet structured_R_k(const PairParams& p, std::uint64_t k) {
    if (k == 0)
        throw std::invalid_argument("structured_R_k requires k >= 1");
    const std::uint64_t a = p.a(), b = p.b();
    const std::uint64_t base = p.ab() * (k - 1);
    GapSet set{p.params(), k, {}, true};
    set.elements.reserve(a * b);
    for (std::uint64_t i = 0; i < b; ++i)
        for (std::uint64_t j = 0; j < a; ++j)
            set.elements.push_back(base + i * a + j * b);
    std::sort(set.elements.begin(), set.elements.end());
    if (std::adjacent_find(set.elements.begin(), set.elements.end()) != set.elements.end())
        throw Error(ErrorKind::Mismatch, "structured R_k has a repeated element for " + p.params().to_string());
    return set;
}

} // namespace frob
