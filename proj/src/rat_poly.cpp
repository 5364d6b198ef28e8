#include "frobenius/rat_poly.hpp"
#include "frobenius/error.hpp"

#include <sstream>
#include <stdexcept>

namespace frob {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::optional<std::size_t> RatPoly::degree() const {
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Rat RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat RatPoly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string RatPoly::to_text() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0)
            continue;
        Rat mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << ' ';
        os << 'x';
        if (i != 1)
            os << '^' << i;
    }
    return os.str();
}

namespace {

// B_0..B_n from sum_{j=0}^{m} C(m+1, j) B_j = 0, m >= 1.
std::vector<Rat> bernoulli_numbers(unsigned n) {
    std::vector<Rat> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Rat acc = 0;
        for (unsigned j = 0; j < m; ++j)
            acc += Rat(binomial(m + 1, j)) * b[j];
        b[m] = -acc / Rat(Int(m + 1));
    }
    return b;
}

} // namespace

Rat bernoulli_number(unsigned n) { return bernoulli_numbers(n)[n]; }

RatPoly bernoulli_poly(unsigned n) {
    // B_n(x) = sum_{j=0}^{n} C(n, j) B_j x^{n-j}
    const std::vector<Rat> b = bernoulli_numbers(n);
    std::vector<Rat> coeffs(n + 1);
    for (unsigned j = 0; j <= n; ++j)
        coeffs[n - j] = Rat(binomial(n, j)) * b[j];
    return RatPoly(std::move(coeffs));
}

RatPoly beta_poly(unsigned k) {
    if (k == 0)
        throw std::invalid_argument("beta_poly requires k >= 1");
    RatPoly bk = bernoulli_poly(k);
    std::vector<Rat> coeffs = bk.coeffs();
    coeffs[0] = 0;
    for (auto& c : coeffs)
        c /= Rat(Int(k));
    return RatPoly(std::move(coeffs));
}

Int beta_value(unsigned k, const Int& x) {
    Rat v = beta_poly(k)(x);
    if (v.get_den() != 1)
        throw Error(ErrorKind::Mismatch, "beta_" + std::to_string(k) + "(" + x.get_str() + ") is not integral");
    return v.get_num();
}

} // namespace frob
