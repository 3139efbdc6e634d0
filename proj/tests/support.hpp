#pragma once

// Shared fixtures and test-only oracles. Nothing here calls into the code
// paths it is used to check.

#include <optional>
#include <random>
#include <vector>

#include "relbr/curve.hpp"
#include "relbr/funcfield.hpp"

namespace relbr::testing {

// y^2 + y = x^3 - x^2 - 10x - 20, torsion Z/5 generated by (5,5)
inline WeierstrassCurve e1() { return {0, -1, 1, -10, -20}; }
// y^2 + xy + y = x^3 + x^2 - 10x - 10, torsion Z/4 x Z/2
inline WeierstrassCurve e2() { return {1, 1, 1, -10, -10}; }
// y^2 = x^3 - 48x, the hyperelliptic Jacobian y^2 = x^3 - 4abx at (a, b) = (4, 3)
inline WeierstrassCurve hyper() { return WeierstrassCurve::short_form(-48, 0); }
// y^2 = x^3 - x, full rational 2-torsion, rank 0
inline WeierstrassCurve full_two() { return WeierstrassCurve::short_form(-1, 0); }

// Positive-rank curves with rational torsion (t = (0,0)); `free` has infinite order.
struct RankedCurve {
    WeierstrassCurve curve;
    unsigned torsion_order;
    CurvePoint free;
};
inline std::vector<RankedCurve> ranked_curves()
{
    return {
        {WeierstrassCurve::short_form(-25, 0), 2, {Rat(-4), Rat(6)}},
        {WeierstrassCurve(0, 0, 6, 0, 0), 3, {Rat(-2), Rat(-2)}},
        {WeierstrassCurve(1, 12, 12, 0, 0), 4, {Rat(-6), Rat(12)}},
        {WeierstrassCurve(9, 8, 8, 0, 0), 5, {Rat(-24), Rat(144)}},
    };
}

inline std::vector<CurvePoint> multiples(const WeierstrassCurve& c, const CurvePoint& g, unsigned n)
{
    std::vector<CurvePoint> out;
    for (unsigned i = 0; i < n; ++i) out.push_back(multiply(c, i, g));
    return out;
}

inline Rat random_rat(std::mt19937& rng, int bound)
{
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    return Rat(Integer(num(rng)), Integer(den(rng)));
}

inline Rat random_nonzero_rat(std::mt19937& rng, int bound)
{
    for (;;) {
        Rat r = random_rat(rng, bound);
        if (!r.is_zero()) return r;
    }
}

inline Poly random_poly(std::mt19937& rng, int max_degree, int bound)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rat> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(random_rat(rng, bound));
    return Poly(std::move(c));
}

inline EllFn random_fn(std::mt19937& rng, const WeierstrassCurve& c)
{
    Poly d = random_poly(rng, 2, 5);
    if (d.is_zero()) d = Poly(1);
    return {c, random_poly(rng, 2, 5), random_poly(rng, 1, 5), d};
}

inline EllFn random_nonzero_fn(std::mt19937& rng, const WeierstrassCurve& c)
{
    for (;;) {
        EllFn f = random_fn(rng, c);
        if (!f.is_zero()) return f;
    }
}

// Direct substitution (A + B y)/D at an affine point; nullopt when D vanishes there.
inline std::optional<Rat> naive_value(const EllFn& f, const CurvePoint& p)
{
    const Rat d = f.d().eval(p.x());
    if (d.is_zero()) return std::nullopt;
    return (f.a().eval(p.x()) + f.b().eval(p.x()) * p.y()) / d;
}

// Solubility of z^2 = a x^2 + b y^2 with a primitive solution modulo p^k,
// for small integers a, b. Exhaustive search.
inline bool primitive_solution_mod(long a, long b, long p, int k)
{
    long mod = 1;
    for (int i = 0; i < k; ++i) mod *= p;
    auto norm = [mod](long v) { return ((v % mod) + mod) % mod; };
    for (long x = 0; x < mod; ++x) {
        for (long y = 0; y < mod; ++y) {
            const long rhs = norm(norm(a) * (x * x % mod) + norm(b) * (y * y % mod));
            for (long z = 0; z < mod; ++z) {
                if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                if (z * z % mod == rhs) return true;
            }
        }
    }
    return false;
}

// Brute-force Hilbert symbol for squarefree-reduced small a, b at p:
// +1 iff z^2 = a x^2 + b y^2 has a primitive solution modulo p^k,
// k = 3 for odd p and k = 5 for p = 2 (enough when v_p(a), v_p(b) <= 1).
inline int brute_hilbert(long a, long b, long p)
{
    auto squarefree = [](long v) {
        for (long q = 2; q * q <= (v < 0 ? -v : v); ++q) {
            while (v % (q * q) == 0) v /= q * q;
        }
        return v;
    };
    return primitive_solution_mod(squarefree(a), squarefree(b), p, p == 2 ? 5 : 3) ? 1 : -1;
}

}  // namespace relbr::testing
