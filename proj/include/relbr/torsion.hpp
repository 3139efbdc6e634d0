#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relbr/curve.hpp"
#include "relbr/factor.hpp"

namespace relbr {

/// E(Q)_tors with explicit generators.
///
/// `invariants` lists the cyclic factors: {n} for Z/n (empty for the trivial
/// group) or {2, 2n} for Z/2 x Z/2n. Generators follow the same order.
struct TorsionGroup {
    std::vector<unsigned> invariants;
    std::vector<std::pair<CurvePoint, unsigned>> generators;
    std::vector<CurvePoint> elements;  // sorted, infinity first

    std::size_t order() const { return elements.size(); }
    /// "Z/1", "Z/5", "Z/2 x Z/4"
    std::string structure() const;
};

/// Torsion subgroup via Lutz-Nagell on a short integral model.
TorsionGroup torsion_subgroup(const WeierstrassCurve& c, const FactorLimits& limits = {});

}  // namespace relbr
