#include "relbr/curve.hpp"

#include <map>

#include "relbr/errors.hpp"
#include "relbr/factor.hpp"
#include "relbr/poly.hpp"

namespace relbr {

std::string CurvePoint::str() const
{
    if (is_infinity()) return "O";
    return "(" + x().str() + "," + y().str() + ")";
}

Rat WeierstrassCoefficients::b8() const
{
    return a1 * a1 * a6 + Rat(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}

Rat WeierstrassCoefficients::c4() const
{
    return b2() * b2() - Rat(24) * b4();
}

Rat WeierstrassCoefficients::c6() const
{
    const Rat B2 = b2();
    return -B2 * B2 * B2 + Rat(36) * B2 * b4() - Rat(216) * b6();
}

Rat WeierstrassCoefficients::discriminant() const
{
    const Rat B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - Rat(8) * B4 * B4 * B4 - Rat(27) * B6 * B6 + Rat(9) * B2 * B4 * B6;
}

WeierstrassCurve::WeierstrassCurve(const WeierstrassCoefficients& a) : a_(a), disc_(a.discriminant())
{
    if (disc_.is_zero()) throw SingularCurve("singular Weierstrass model (discriminant 0)");
}

bool WeierstrassCurve::contains(const CurvePoint& p) const
{
    if (p.is_infinity()) return true;
    const Rat &x = p.x(), &y = p.y();
    return y * y + a_.a1 * x * y + a_.a3 * y == x * x * x + a_.a2 * x * x + a_.a4 * x + a_.a6;
}

void WeierstrassCurve::require(const CurvePoint& p) const
{
    if (!contains(p)) throw PointNotOnCurve("point " + p.str() + " is not on " + str());
}

std::string WeierstrassCurve::str() const
{
    auto term = [](std::string& out, const Rat& c, const std::string& mono) {
        if (c.is_zero()) return;
        const Rat mag = c.abs();
        out += c.sign() < 0 ? " - " : " + ";
        if (mono.empty()) out += mag.str();
        else out += (mag == Rat(1) ? "" : mag.str() + "*") + mono;
    };
    std::string lhs = "y^2";
    term(lhs, a_.a1, "x*y");
    term(lhs, a_.a3, "y");
    std::string rhs = "x^3";
    term(rhs, a_.a2, "x^2");
    term(rhs, a_.a4, "x");
    term(rhs, a_.a6, "");
    return lhs + " = " + rhs;
}

WeierstrassCoefficients ModelMap::transform(const WeierstrassCoefficients& a) const
{
    const Rat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    WeierstrassCoefficients out;
    out.a1 = (a.a1 + Rat(2) * s) / u;
    out.a2 = (a.a2 - s * a.a1 + Rat(3) * r - s * s) / u2;
    out.a3 = (a.a3 + r * a.a1 + Rat(2) * t) / u3;
    out.a4 = (a.a4 - s * a.a3 + Rat(2) * r * a.a2 - (t + r * s) * a.a1 + Rat(3) * r * r - Rat(2) * s * t) / u4;
    out.a6 = (a.a6 + r * a.a4 + r * r * a.a2 + r * r * r - t * a.a3 - t * t - r * t * a.a1) / u6;
    return out;
}

CurvePoint ModelMap::apply(const CurvePoint& p) const
{
    if (p.is_infinity()) return p;
    const Rat u2 = u * u;
    const Rat xp = (p.x() - r) / u2;
    const Rat yp = (p.y() - s * u2 * xp - t) / (u2 * u);
    return {xp, yp};
}

CurvePoint ModelMap::invert(const CurvePoint& p) const
{
    if (p.is_infinity()) return p;
    const Rat u2 = u * u;
    return {u2 * p.x() + r, u2 * u * p.y() + s * u2 * p.x() + t};
}

Rat discriminant(const WeierstrassCurve& c)
{
    return c.discriminant();
}

CurvePoint negate(const WeierstrassCurve& c, const CurvePoint& p)
{
    c.require(p);
    if (p.is_infinity()) return p;
    return {p.x(), -p.y() - c.a1() * p.x() - c.a3()};
}

CurvePoint add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q)
{
    c.require(p);
    c.require(q);
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rat lambda, nu;
    if (x1 == x2) {
        // Same x: either q = -p (vertical chord) or q = p.
        if (y1 != y2) return CurvePoint::infinity();
        const Rat denom = Rat(2) * y1 + c.a1() * x1 + c.a3();
        if (denom.is_zero()) return CurvePoint::infinity();
        lambda = (Rat(3) * x1 * x1 + Rat(2) * c.a2() * x1 + c.a4() - c.a1() * y1) / denom;
        nu = (-x1 * x1 * x1 + c.a4() * x1 + Rat(2) * c.a6() - c.a3() * y1) / denom;
    } else {
        lambda = (y2 - y1) / (x2 - x1);
        nu = (y1 * x2 - y2 * x1) / (x2 - x1);
    }
    const Rat x3 = lambda * lambda + c.a1() * lambda - c.a2() - x1 - x2;
    const Rat y3 = -(lambda + c.a1()) * x3 - nu - c.a3();
    return {x3, y3};
}

CurvePoint subtract(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q)
{
    return add(c, p, negate(c, q));
}

CurvePoint multiply(const WeierstrassCurve& c, long n, const CurvePoint& p)
{
    c.require(p);
    if (n < 0) return negate(c, multiply(c, -n, p));
    CurvePoint acc, base = p;
    auto k = static_cast<unsigned long>(n);
    while (k > 0) {
        if (k & 1UL) acc = add(c, acc, base);
        k >>= 1;
        if (k > 0) base = add(c, base, base);
    }
    return acc;
}

std::optional<unsigned> point_order(const WeierstrassCurve& c, const CurvePoint& p, unsigned bound)
{
    c.require(p);
    CurvePoint acc = p;
    for (unsigned n = 1; n <= bound; ++n) {
        if (acc.is_infinity()) return n;
        acc = add(c, acc, p);
    }
    return std::nullopt;
}

std::pair<WeierstrassCurve, ModelMap> to_short_integral(const WeierstrassCurve& c)
{
    const auto& a = c.coefficients();
    ModelMap map;
    map.s = -a.a1 / Rat(2);
    map.r = (map.s * map.s + map.s * a.a1 - a.a2) / Rat(3);
    map.t = -(a.a3 + map.r * a.a1) / Rat(2);
    const WeierstrassCoefficients shortened = map.transform(a);

    // Choose u = 1/k with k minimal such that a4 k^4 and a6 k^6 are integers.
    std::map<Integer, unsigned> need;
    auto require_scaling = [&need](const Rat& coeff, unsigned weight) {
        if (coeff.is_zero()) return;
        for (const auto& [p, e] : factor(coeff.den()).primes) {
            const unsigned k = (e + weight - 1) / weight;
            need[p] = std::max(need[p], k);
        }
    };
    require_scaling(shortened.a4, 4);
    require_scaling(shortened.a6, 6);
    Integer k = 1;
    for (const auto& [p, e] : need) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        k *= pe;
    }
    map.u = Rat(Integer(1), k);
    return {WeierstrassCurve(map.transform(a)), map};
}

}  // namespace relbr
