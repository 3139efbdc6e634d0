#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "relbr/rat.hpp"

namespace relbr {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const Rat& constant) { if (!constant.is_zero()) c_.push_back(constant); }
    Poly(int constant) : Poly(Rat(constant)) {}

    static Poly x() { return Poly{Rat(0), Rat(1)}; }
    /// x - root
    static Poly linear(const Rat& root) { return Poly{-root, Rat(1)}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& at) const;
    Poly monic() const;
    Poly derivative() const;
    /// p(x + shift)
    Poly shifted(const Rat& shift) const;
    /// Multiplicity of `root` as a zero of this (nonzero) polynomial.
    int multiplicity_of(const Rat& root) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str(char var = 'x') const;

private:
    void trim();

    std::vector<Rat> c_;
};

/// Quotient and remainder of Euclidean division. Throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Exact quotient; the caller guarantees den divides num.
Poly exact_div(const Poly& num, const Poly& den);

/// Monic greatest common divisor; poly_gcd(0, 0) is 0.
Poly poly_gcd(Poly f, Poly g);

}  // namespace relbr
