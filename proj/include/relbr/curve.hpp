#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "relbr/rat.hpp"

namespace relbr {

/// A point of a Weierstrass curve: either the point at infinity 0_E or an affine (x, y).
class CurvePoint {
public:
    CurvePoint() = default;  // infinity
    CurvePoint(Rat x, Rat y) : xy_(std::in_place, std::move(x), std::move(y)) {}

    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !xy_.has_value(); }
    const Rat& x() const { return xy_->first; }
    const Rat& y() const { return xy_->second; }

    /// "O" or "(x,y)".
    std::string str() const;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    /// Infinity first, then lexicographic in (x, y).
    friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b)
    {
        if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() <=> !b.is_infinity();
        return *a.xy_ <=> *b.xy_;
    }
    friend std::ostream& operator<<(std::ostream& os, const CurvePoint& p) { return os << p.str(); }

private:
    std::optional<std::pair<Rat, Rat>> xy_;
};

struct WeierstrassCoefficients {
    Rat a1, a2, a3, a4, a6;

    Rat b2() const { return a1 * a1 + Rat(4) * a2; }
    Rat b4() const { return Rat(2) * a4 + a1 * a3; }
    Rat b6() const { return a3 * a3 + Rat(4) * a6; }
    Rat b8() const;
    Rat c4() const;
    Rat c6() const;
    Rat discriminant() const;

    friend bool operator==(const WeierstrassCoefficients&, const WeierstrassCoefficients&) = default;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, nonsingular by construction.
class WeierstrassCurve {
public:
    /// Throws SingularCurve when the discriminant vanishes.
    explicit WeierstrassCurve(const WeierstrassCoefficients& a);
    WeierstrassCurve(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6)
        : WeierstrassCurve(WeierstrassCoefficients{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)})
    {
    }
    /// y^2 = x^3 + A x + B
    static WeierstrassCurve short_form(const Rat& A, const Rat& B) { return {0, 0, 0, A, B}; }

    const WeierstrassCoefficients& coefficients() const { return a_; }
    const Rat& a1() const { return a_.a1; }
    const Rat& a2() const { return a_.a2; }
    const Rat& a3() const { return a_.a3; }
    const Rat& a4() const { return a_.a4; }
    const Rat& a6() const { return a_.a6; }

    const Rat& discriminant() const { return disc_; }
    bool is_short() const { return a_.a1.is_zero() && a_.a2.is_zero() && a_.a3.is_zero(); }

    bool contains(const CurvePoint& p) const;
    /// Throws PointNotOnCurve unless contains(p).
    void require(const CurvePoint& p) const;

    /// Equation text, e.g. "y^2 + y = x^3 - x^2 - 10*x - 20".
    std::string str() const;

    friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) { return a.a_ == b.a_; }

private:
    WeierstrassCoefficients a_;
    Rat disc_;
};

/// Admissible change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct ModelMap {
    Rat u = 1, r = 0, s = 0, t = 0;

    /// Coefficients of the model in the primed coordinates.
    WeierstrassCoefficients transform(const WeierstrassCoefficients& a) const;
    /// Sends a point of the source model to the primed model.
    CurvePoint apply(const CurvePoint& p) const;
    /// Sends a point of the primed model back to the source model.
    CurvePoint invert(const CurvePoint& p) const;
};

Rat discriminant(const WeierstrassCurve& c);
CurvePoint negate(const WeierstrassCurve& c, const CurvePoint& p);
CurvePoint add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q);
CurvePoint subtract(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q);
CurvePoint multiply(const WeierstrassCurve& c, long n, const CurvePoint& p);

inline constexpr unsigned kMazurBound = 16;

/// Smallest n >= 1 with [n]p = 0_E, or nullopt when no such n <= bound exists.
std::optional<unsigned> point_order(const WeierstrassCurve& c, const CurvePoint& p, unsigned bound = kMazurBound);

/// An isomorphic model with a1 = a2 = a3 = 0 and integral a4, a6, together with
/// the map from `c` to it.
std::pair<WeierstrassCurve, ModelMap> to_short_integral(const WeierstrassCurve& c);

}  // namespace relbr
