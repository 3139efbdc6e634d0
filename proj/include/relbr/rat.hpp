#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace relbr {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(int v) : q_(v) {}
    Rat(long v) : q_(v) {}
    Rat(const Integer& n) : q_(n) {}
    Rat(const Integer& num, const Integer& den);

    /// Parses "n" or "n/d" with an optional sign. Throws ParseError.
    static Rat parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat inverse() const;
    Rat pow(long e) const;

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

    const mpq_class& raw() const { return q_; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpq_class q_;
};

}  // namespace relbr
