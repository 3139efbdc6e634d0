#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "relbr/curve.hpp"
#include "relbr/poly.hpp"

namespace relbr {

/// An element (A(x) + B(x) y) / D(x) of the function field Q(E).
///
/// Canonical form: D monic, gcd(A, B, D) = 1, and y appears at most linearly
/// (y^2 is rewritten through the curve equation). Two functions are equal iff
/// their (A, B, D) triples coincide.
class EllFn {
public:
    EllFn(WeierstrassCurve curve, Poly a, Poly b = {}, Poly d = Poly(1));

    static EllFn constant(const WeierstrassCurve& c, const Rat& value) { return {c, Poly(value)}; }
    static EllFn x(const WeierstrassCurve& c) { return {c, Poly::x()}; }
    static EllFn y(const WeierstrassCurve& c) { return {c, Poly(), Poly(1)}; }

    const WeierstrassCurve& curve() const { return curve_; }
    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    const Poly& d() const { return d_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Image under y -> -y - a1 x - a3, i.e. the pullback by negation.
    EllFn conjugate() const;
    /// Throws DivisionByZeroFunction for the zero function.
    EllFn inverse() const;

    EllFn operator-() const { return {curve_, -a_, -b_, d_}; }
    friend EllFn operator+(const EllFn& f, const EllFn& g);
    friend EllFn operator-(const EllFn& f, const EllFn& g) { return f + (-g); }
    friend EllFn operator*(const EllFn& f, const EllFn& g);
    friend EllFn operator/(const EllFn& f, const EllFn& g) { return f * g.inverse(); }
    friend EllFn operator*(const Rat& s, const EllFn& f) { return {f.curve_, f.a_ * s, f.b_ * s, f.d_}; }
    EllFn& operator*=(const EllFn& g) { return *this = *this * g; }

    friend bool operator==(const EllFn& f, const EllFn& g)
    {
        return f.curve_ == g.curve_ && f.a_ == g.a_ && f.b_ == g.b_ && f.d_ == g.d_;
    }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const EllFn& f) { return os << f.str(); }

private:
    void canonicalize();

    WeierstrassCurve curve_;
    Poly a_, b_, d_;
};

/// Substitutes a function for x in a polynomial.
EllFn compose(const Poly& p, const EllFn& x_value);

struct EvalResult {
    enum class Kind { Value, Pole };
    Kind kind = Kind::Value;
    Rat value;

    static EvalResult pole() { return {Kind::Pole, Rat()}; }
    bool is_pole() const { return kind == Kind::Pole; }
    friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

/// Value of f at P: a rational, or Pole. Removable 0/0 forms are resolved
/// exactly through a local expansion at P, so the result is always decided.
EvalResult eval_at(const EllFn& f, const CurvePoint& p);

/// Order of vanishing of a nonzero f at P (negative at poles).
int order_at(const EllFn& f, const CurvePoint& p);

/// The pullback P -> f(P - q). translate(f, O) == f.
EllFn translate(const EllFn& f, const CurvePoint& q);

/// The value c if f is the constant function c.
std::optional<Rat> as_constant(const EllFn& f);

bool vanishes_at(const EllFn& f, const CurvePoint& p);
/// Throws DivisionByZeroFunction for f = 0.
bool has_pole_at(const EllFn& f, const CurvePoint& p);

/// A formal sum of rational points with nonzero integer multiplicities.
class FormalDivisor {
public:
    FormalDivisor() = default;

    /// Adds mult * P, dropping the term when it cancels.
    FormalDivisor& add(const CurvePoint& p, int mult);

    const std::map<CurvePoint, int>& terms() const { return terms_; }
    int degree() const;
    int multiplicity(const CurvePoint& p) const;
    std::string str() const;

    friend bool operator==(const FormalDivisor&, const FormalDivisor&) = default;

private:
    std::map<CurvePoint, int> terms_;
};

/// True iff order_at(f, P) equals the listed multiplicity at every support point of `div`.
bool orders_match(const EllFn& f, const FormalDivisor& div);

}  // namespace relbr
