#include "relbr/torsion.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace relbr {

namespace {

// Integer roots of x^3 + A x + C, found by bisection on each monotone branch.
std::vector<Integer> integer_roots_of_depressed_cubic(const Integer& A, const Integer& C)
{
    auto g = [&](const Integer& x) -> Integer { return x * x * x + A * x + C; };
    const Integer bound = 1 + std::max(abs(A), abs(C));

    std::vector<std::pair<Integer, Integer>> branches;  // inclusive, g monotone on each
    if (A >= 0) {
        branches.emplace_back(-bound, bound);
    } else {
        // critical points at +-r with r^2 = -A/3
        Integer q = -A / 3;  // floor, since -A > 0
        Integer lo_root;
        mpz_sqrt(lo_root.get_mpz_t(), q.get_mpz_t());
        const Integer hi_root = (lo_root * lo_root * 3 == -A) ? lo_root : Integer(lo_root + 1);
        branches.emplace_back(-bound, -hi_root);
        branches.emplace_back(-lo_root, lo_root);
        branches.emplace_back(hi_root, bound);
    }

    std::set<Integer> roots;
    for (auto [lo, hi] : branches) {
        if (lo > hi) continue;
        Integer glo = g(lo), ghi = g(hi);
        if (glo == 0) roots.insert(lo);
        if (ghi == 0) roots.insert(hi);
        if (sgn(glo) * sgn(ghi) >= 0) continue;
        const bool increasing = glo < 0;
        while (hi - lo > 1) {
            Integer mid = (lo + hi) / 2;
            const Integer gm = g(mid);
            if (gm == 0) {
                roots.insert(mid);
                break;
            }
            if ((gm < 0) == increasing) lo = mid;
            else hi = mid;
        }
    }
    return {roots.begin(), roots.end()};
}

// Positive y with y^2 dividing n (n != 0).
std::vector<Integer> square_divisor_roots(const Integer& n, const FactorLimits& limits)
{
    std::vector<Integer> ys{Integer(1)};
    for (const auto& [p, e] : factor(n, limits).primes) {
        const std::size_t count = ys.size();
        Integer pk = 1;
        for (unsigned k = 1; 2 * k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) ys.push_back(ys[i] * pk);
        }
    }
    return ys;
}

}  // namespace

std::string TorsionGroup::structure() const
{
    if (invariants.empty()) return "Z/1";
    std::string out;
    for (const unsigned n : invariants) {
        if (!out.empty()) out += " x ";
        out += "Z/" + std::to_string(n);
    }
    return out;
}

TorsionGroup torsion_subgroup(const WeierstrassCurve& c, const FactorLimits& limits)
{
    const auto [model, map] = to_short_integral(c);
    const Integer A = model.a4().num();
    const Integer B = model.a6().num();
    const Integer D = -(4 * A * A * A + 27 * B * B);

    std::vector<Integer> ys{Integer(0)};
    for (const Integer& y : square_divisor_roots(D, limits)) {
        ys.push_back(y);
        ys.push_back(-y);
    }

    std::set<CurvePoint> elements{CurvePoint::infinity()};
    for (const Integer& y : ys) {
        for (const Integer& x : integer_roots_of_depressed_cubic(A, Integer(B - y * y))) {
            const CurvePoint candidate{Rat(x), Rat(y)};
            if (point_order(model, candidate).has_value()) elements.insert(map.invert(candidate));
        }
    }

    TorsionGroup group;
    group.elements.assign(elements.begin(), elements.end());

    std::vector<std::pair<CurvePoint, unsigned>> ordered;
    unsigned max_order = 1, two_torsion = 0;
    for (const CurvePoint& p : group.elements) {
        const unsigned n = *point_order(c, p);
        ordered.emplace_back(p, n);
        max_order = std::max(max_order, n);
        if (n <= 2) ++two_torsion;
    }
    // smallest x first; of the pair P, -P sharing that x, the larger y
    auto preferred = [](const CurvePoint& a, const CurvePoint& b) {
        if (a.x() != b.x()) return a.x() < b.x();
        return a.y() > b.y();
    };
    auto first_of_order = [&](unsigned n) {
        std::optional<std::pair<CurvePoint, unsigned>> best;
        for (const auto& e : ordered) {
            if (e.second == n && (!best || preferred(e.first, best->first))) best = e;
        }
        return *best;
    };

    if (max_order == 1) return group;
    const auto main_gen = first_of_order(max_order);
    if (two_torsion == 4) {
        group.invariants = {2, max_order};
        // a 2-torsion point outside <main_gen>
        const CurvePoint inside = multiply(c, max_order / 2, main_gen.first);
        const auto second = *std::find_if(ordered.begin(), ordered.end(),
                                          [&](const auto& e) { return e.second == 2 && e.first != inside; });
        group.generators = {second, main_gen};
    } else {
        group.invariants = {max_order};
        group.generators = {main_gen};
    }
    return group;
}

}  // namespace relbr
