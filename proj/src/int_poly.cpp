#include "frobenius/int_poly.hpp"
#include "frobenius/error.hpp"

#include <sstream>

namespace frob {

IntPoly::IntPoly(std::initializer_list<std::pair<Exponent, long>> terms) {
    for (const auto& [e, c] : terms)
        add_term(e, Int(c));
}

IntPoly IntPoly::constant(const Int& c) { return monomial(0, c); }

IntPoly IntPoly::monomial(Exponent e, const Int& c) {
    IntPoly p;
    p.add_term(e, c);
    return p;
}

IntPoly IntPoly::one_minus_z_pow(Exponent e) {
    IntPoly p = constant(1);
    p.add_term(e, -1);
    return p;
}

IntPoly IntPoly::geometric(Exponent step, std::uint64_t count) {
    IntPoly p;
    for (std::uint64_t i = 0; i < count; ++i)
        p.add_term(i * step, 1);
    return p;
}

std::optional<IntPoly::Exponent> IntPoly::degree() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first;
}

Int IntPoly::coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Int IntPoly::value_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

void IntPoly::add_term(Exponent e, const Int& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

IntPoly IntPoly::shifted(Exponent by) const {
    IntPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e + by, c);
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = poly_mul(*this, rhs);
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) { return poly_mul(lhs, rhs); }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

std::vector<Int> IntPoly::dense(std::size_t n) const {
    std::vector<Int> out(n);
    for (const auto& [e, c] : terms_) {
        if (e >= n)
            break;
        out[e] = c;
    }
    return out;
}

std::string IntPoly::to_text() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0)
                os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << '*';
        os << 'z';
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
    IntPoly r;
    if (p.is_zero() || q.is_zero())
        return r;
    Int prod;
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) {
            prod = cp * cq;
            r.add_term(ep + eq, prod);
        }
    return r;
}

IntPoly poly_exact_div(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero())
        throw Error(ErrorKind::Mismatch, "division by the zero polynomial");
    const auto d_deg = *d.degree();
    const Int& d_lead = d.terms().rbegin()->second;

    IntPoly rem = p;
    IntPoly quot;
    Int q, r;
    while (!rem.is_zero()) {
        const auto r_deg = *rem.degree();
        if (r_deg < d_deg)
            break;
        const Int& r_lead = rem.terms().rbegin()->second;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), r_lead.get_mpz_t(), d_lead.get_mpz_t());
        if (r != 0)
            break;
        const auto shift = r_deg - d_deg;
        quot.add_term(shift, q);
        for (const auto& [e, c] : d.terms())
            rem.add_term(e + shift, -(c * q));
    }
    if (!rem.is_zero())
        throw Error(ErrorKind::NotDivisible, "(" + p.to_text() + ") / (" + d.to_text() + ")");
    return quot;
}

Json to_json(const IntPoly& p) {
    auto terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json::array({e, c.get_str()}));
    return Json{{"terms", std::move(terms)}};
}

IntPoly int_poly_from_json(const Json& j) {
    IntPoly p;
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 2)
            throw std::invalid_argument("polynomial term must be [exp, \"coeff\"]");
        p.add_term(term[0].get<IntPoly::Exponent>(), parse_int(term[1].get<std::string>()));
    }
    return p;
}

} // namespace frob
