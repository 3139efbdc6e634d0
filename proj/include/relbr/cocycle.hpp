#pragma once

#include <span>
#include <utility>
#include <vector>

#include "relbr/brauer.hpp"
#include "relbr/curve.hpp"
#include "relbr/funcfield.hpp"

namespace relbr {

/// The homomorphism sigma^i -> [i]t from a cyclic group of order m into E(Q),
/// a 1-cocycle with rational values.
class RationalCocycle {
public:
    /// Throws PointNotOnCurve, or InvalidArgument unless m >= 1 and [m]t = 0_E.
    RationalCocycle(WeierstrassCurve curve, unsigned m, CurvePoint t);

    const WeierstrassCurve& curve() const { return curve_; }
    unsigned m() const { return m_; }
    const CurvePoint& t() const { return t_; }
    /// [i mod m] t
    CurvePoint gamma(unsigned i) const { return multiply(curve_, static_cast<long>(i % m_), t_); }

private:
    WeierstrassCurve curve_;
    unsigned m_;
    CurvePoint t_;
};

/// A Q*-valued 2-cochain on Z/m; entry (i, j) is c(sigma^i, sigma^j).
class TwoCocycle {
public:
    /// The all-ones table.
    explicit TwoCocycle(unsigned m) : m_(m), values_(static_cast<std::size_t>(m) * m, Rat(1)) {}

    unsigned m() const { return m_; }
    const Rat& at(unsigned i, unsigned j) const { return values_[index(i, j)]; }
    void set(unsigned i, unsigned j, Rat v) { values_[index(i, j)] = std::move(v); }

    friend bool operator==(const TwoCocycle&, const TwoCocycle&) = default;

private:
    std::size_t index(unsigned i, unsigned j) const { return static_cast<std::size_t>(i % m_) * m_ + (j % m_); }

    unsigned m_;
    std::vector<Rat> values_;
};

/// The line through p and q (tangent when p = q). A vertical line is always
/// returned as x - x1, and lines involving 0_E degenerate to x - x1 or 1.
EllFn line(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q);

/// l_{p1,p2} / l_{q,-q} with q = p1 + p2; its divisor is p1 + p2 - q - 0_E.
EllFn sum_witness(const WeierstrassCurve& c, const CurvePoint& p1, const CurvePoint& p2);
FormalDivisor sum_witness_divisor(const WeierstrassCurve& c, const CurvePoint& p1, const CurvePoint& p2);

/// f_{p,sigma} = l_{g+p, -g-p} / l_{g,p} for g = gamma(sigma); its divisor is
/// (g + p) + 0_E - g - p.
EllFn f_function(const WeierstrassCurve& c, const CurvePoint& gamma_s, const CurvePoint& p);
FormalDivisor f_function_divisor(const WeierstrassCurve& c, const CurvePoint& gamma_s, const CurvePoint& p);

/// c_p(sigma^i, sigma^j) = f_i * (f_j translated by [i]t) / f_{i+j}, each entry
/// established as a constant symbolically.
///
/// `scales`, when given, must have m entries with scales[0] = 1; f_i is then
/// replaced by scales[i] * f_i. Throws NonConstantCocycleValue if an entry is
/// not constant, which indicates an implementation fault.
TwoCocycle two_cocycle(const RationalCocycle& rc, const CurvePoint& p, std::span<const Rat> scales = {});

/// Normalization and the 2-cocycle identity with trivial action on Q*.
bool verify_two_cocycle(const TwoCocycle& c);

/// b = c(1,1) c(2,1) ... c(m-1,1), the parameter of the equivalent cyclic algebra.
Rat cyclic_reduce(const TwoCocycle& c);

/// The class a_X(p) = (L/Q, sigma, b).
CyclicAlgebraClass pairing(const RationalCocycle& rc, const CurvePoint& p, const ExtensionDescriptor& ext,
                           const FactorLimits& limits = {});

/// Images of the given generators of E(Q) (asserted by the caller), with
/// verdicts and, for m = 2 over a quadratic field, the exact group structure.
BrauerPresentation relative_brauer(const RationalCocycle& rc, const std::vector<std::pair<CurvePoint, unsigned>>& gens,
                                   const ExtensionDescriptor& ext, const FactorLimits& limits = {});

}  // namespace relbr
