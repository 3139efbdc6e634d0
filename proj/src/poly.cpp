#include "relbr/poly.hpp"

#include <stdexcept>

namespace relbr {

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::eval(const Rat& at) const
{
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::monic() const
{
    if (is_zero()) return {};
    Poly out = *this;
    out *= lead().inverse();
    return out;
}

Poly Poly::derivative() const
{
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return Poly(std::move(d));
}

Poly Poly::shifted(const Rat& shift) const
{
    // Horner in the variable (x + shift).
    const Poly step{shift, Rat(1)};
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * step + Poly(*it);
    return acc;
}

int Poly::multiplicity_of(const Rat& root) const
{
    if (is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
    const Poly factor = linear(root);
    Poly rest = *this;
    int k = 0;
    for (;;) {
        auto [q, r] = divmod(rest, factor);
        if (!r.is_zero()) return k;
        rest = std::move(q);
        ++k;
    }
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

std::string Poly::str(char var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rat mag = c.abs();
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == Rat(1);
        if (i == 0 || !unit) out += mag.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den)
{
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Poly(), num};
    std::vector<Rat> rem = num.coeffs();
    std::vector<Rat> quo(static_cast<std::size_t>(num.degree() - den.degree() + 1));
    const Rat inv_lead = den.lead().inverse();
    const auto dd = static_cast<std::size_t>(den.degree());
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rat coef = rem[k + dd] * inv_lead;
        quo[k] = coef;
        if (coef.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= coef * den[j];
    }
    rem.resize(dd);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& num, const Poly& den)
{
    return divmod(num, den).first;
}

Poly poly_gcd(Poly f, Poly g)
{
    while (!g.is_zero()) {
        Poly r = divmod(f, g).second;
        f = std::move(g);
        g = r.monic();
    }
    return f.monic();
}

}  // namespace relbr
