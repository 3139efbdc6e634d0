#include "relbr/rat.hpp"

#include <cctype>

#include "relbr/errors.hpp"

namespace relbr {

Rat::Rat(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw ParseError("expected digits", offset + i);
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) throw ParseError("unexpected character in integer", offset + k);
    }
    Integer value(std::string(text.substr(i)), 10);
    return negative ? Integer(-value) : value;
}

}  // namespace

Rat Rat::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text, 0));
    const Integer n = parse_integer(text.substr(0, slash), 0);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-')) throw ParseError("signed denominator", slash + 1);
    const Integer d = parse_integer(den_text, slash + 1);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
    return Rat(n, d);
}

Rat Rat::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rat(mpq_class(1) / q_);
}

Rat Rat::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rat::str() const
{
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace relbr
