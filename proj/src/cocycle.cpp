#include "relbr/cocycle.hpp"

#include "relbr/errors.hpp"

namespace relbr {

RationalCocycle::RationalCocycle(WeierstrassCurve curve, unsigned m, CurvePoint t)
    : curve_(std::move(curve)), m_(m), t_(std::move(t))
{
    if (m_ == 0) throw InvalidArgument("cyclic group order must be positive");
    curve_.require(t_);
    if (!multiply(curve_, m_, t_).is_infinity()) {
        throw InvalidArgument("[" + std::to_string(m_) + "]" + t_.str() + " is not 0_E");
    }
}

EllFn line(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q)
{
    c.require(p);
    c.require(q);
    if (p.is_infinity() && q.is_infinity()) return EllFn::constant(c, Rat(1));
    if (q.is_infinity()) return {c, Poly::linear(p.x())};
    if (p.is_infinity()) return {c, Poly::linear(q.x())};
    const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    if (p == q) {
        const Rat dy = Rat(2) * y1 + c.a1() * x1 + c.a3();
        if (dy.is_zero()) return {c, Poly::linear(x1)};
        const Rat dx = Rat(3) * x1 * x1 + Rat(2) * c.a2() * x1 + c.a4() - c.a1() * y1;
        // (y - y1) dy - (x - x1) dx
        return {c, Poly{-y1 * dy + x1 * dx, -dx}, Poly(dy)};
    }
    if (x1 == x2) return {c, Poly::linear(x1)};
    return {c, Poly{x2 * y1 - x1 * y2, y2 - y1}, Poly(x1 - x2)};
}

EllFn sum_witness(const WeierstrassCurve& c, const CurvePoint& p1, const CurvePoint& p2)
{
    const CurvePoint q = add(c, p1, p2);
    return line(c, p1, p2) / line(c, q, negate(c, q));
}

FormalDivisor sum_witness_divisor(const WeierstrassCurve& c, const CurvePoint& p1, const CurvePoint& p2)
{
    FormalDivisor div;
    div.add(p1, 1).add(p2, 1).add(add(c, p1, p2), -1).add(CurvePoint::infinity(), -1);
    return div;
}

EllFn f_function(const WeierstrassCurve& c, const CurvePoint& gamma_s, const CurvePoint& p)
{
    const CurvePoint sum = add(c, gamma_s, p);
    return line(c, sum, negate(c, sum)) / line(c, gamma_s, p);
}

FormalDivisor f_function_divisor(const WeierstrassCurve& c, const CurvePoint& gamma_s, const CurvePoint& p)
{
    FormalDivisor div;
    div.add(add(c, gamma_s, p), 1).add(CurvePoint::infinity(), 1).add(gamma_s, -1).add(p, -1);
    return div;
}

TwoCocycle two_cocycle(const RationalCocycle& rc, const CurvePoint& p, std::span<const Rat> scales)
{
    const WeierstrassCurve& c = rc.curve();
    c.require(p);
    const unsigned m = rc.m();
    if (!scales.empty()) {
        if (scales.size() != m || scales[0] != Rat(1)) throw InvalidArgument("scales need m entries with scales[0] = 1");
    }

    std::vector<CurvePoint> gammas;
    std::vector<EllFn> fs;
    for (unsigned i = 0; i < m; ++i) {
        gammas.push_back(rc.gamma(i));
        EllFn f = f_function(c, gammas.back(), p);
        if (!scales.empty()) {
            if (scales[i].is_zero()) throw InvalidArgument("zero rescaling constant");
            f = scales[i] * f;
        }
        fs.push_back(std::move(f));
    }

    TwoCocycle table(m);
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) {
            const EllFn entry = fs[i] * translate(fs[j], gammas[i]) / fs[(i + j) % m];
            const auto value = as_constant(entry);
            if (!value) {
                throw NonConstantCocycleValue("c(" + std::to_string(i) + "," + std::to_string(j) + ") = " + entry.str() + " is not constant");
            }
            table.set(i, j, *value);
        }
    }
    return table;
}

bool verify_two_cocycle(const TwoCocycle& c)
{
    const unsigned m = c.m();
    for (unsigned i = 0; i < m; ++i) {
        if (c.at(0, i) != Rat(1) || c.at(i, 0) != Rat(1)) return false;
    }
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) {
            for (unsigned k = 0; k < m; ++k) {
                if (c.at(i, j) * c.at((i + j) % m, k) != c.at(j, k) * c.at(i, (j + k) % m)) return false;
            }
        }
    }
    return true;
}

Rat cyclic_reduce(const TwoCocycle& c)
{
    Rat b(1);
    for (unsigned i = 1; i < c.m(); ++i) b *= c.at(i, 1);
    return b;
}

CyclicAlgebraClass pairing(const RationalCocycle& rc, const CurvePoint& p, const ExtensionDescriptor& ext, const FactorLimits& limits)
{
    if (ext.degree() != rc.m()) {
        throw InvalidArgument("extension " + ext.str() + " has degree " + std::to_string(ext.degree()) + " but the cocycle has m = " + std::to_string(rc.m()));
    }
    return CyclicAlgebraClass::make(rc.m(), ext, cyclic_reduce(two_cocycle(rc, p)), limits);
}

BrauerPresentation relative_brauer(const RationalCocycle& rc, const std::vector<std::pair<CurvePoint, unsigned>>& gens,
                                   const ExtensionDescriptor& ext, const FactorLimits& limits)
{
    BrauerPresentation out;
    out.order_bound = rc.m();
    std::vector<CyclicAlgebraClass> classes;
    for (const auto& [point, order] : gens) {
        CyclicAlgebraClass alg = pairing(rc, point, ext, limits);
        ClassVerdict verdict = classify(alg, limits);
        classes.push_back(alg);
        out.entries.push_back({point, order, std::move(alg), std::move(verdict)});
    }
    if (rc.m() == 2 && ext.is_quadratic()) out.group_structure = quaternion_group_structure(classes, limits);
    return out;
}

}  // namespace relbr
