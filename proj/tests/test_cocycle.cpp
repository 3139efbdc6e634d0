#include <doctest.h>

#include <random>

#include "relbr/cocycle.hpp"
#include "relbr/errors.hpp"
#include "relbr/factor.hpp"
#include "support.hpp"

using namespace relbr;
using testing::e1;
using testing::e2;

namespace {

const Poly X = Poly::x();

bool proportional(const EllFn& f, const EllFn& g)
{
    const auto r = as_constant(f / g);
    return r && !r->is_zero();
}

// c(i,j) from values of the f_i at a point P; nullopt if any factor is 0 or a pole there.
std::optional<Rat> pointwise_entry(const RationalCocycle& rc, const std::vector<EllFn>& fs, unsigned i, unsigned j,
                                   const CurvePoint& at)
{
    const CurvePoint shifted = subtract(rc.curve(), at, rc.gamma(i));
    const EvalResult a = eval_at(fs[i], at), b = eval_at(fs[j], shifted), c = eval_at(fs[(i + j) % rc.m()], at);
    for (const auto* v : {&a, &b, &c}) {
        if (v->is_pole() || v->value.is_zero()) return std::nullopt;
    }
    return a.value * b.value / c.value;
}

}  // namespace

TEST_CASE("RationalCocycle validation")
{
    CHECK_NOTHROW(RationalCocycle(e1(), 5, {5, 5}));
    CHECK_NOTHROW(RationalCocycle(e1(), 10, {5, 5}));
    CHECK_THROWS_AS(RationalCocycle(e1(), 4, {5, 5}), InvalidArgument);
    CHECK_THROWS_AS(RationalCocycle(e1(), 0, {5, 5}), InvalidArgument);
    CHECK_THROWS_AS(RationalCocycle(e1(), 5, {5, 6}), PointNotOnCurve);
    const RationalCocycle rc(e1(), 5, {5, 5});
    CHECK(rc.gamma(0).is_infinity());
    CHECK(rc.gamma(7) == rc.gamma(2));
}

TEST_CASE("line")
{
    const auto c = e1();
    CHECK(line(c, {5, 5}, {5, 5}) == EllFn(c, Poly{220, -55}, Poly(11)));  // 11(y-5) - 55(x-5)
    CHECK(line(c, {5, 5}, {5, -6}) == EllFn(c, Poly::linear(5)));
    CHECK(line(c, {5, 5}, CurvePoint::infinity()) == EllFn(c, Poly::linear(5)));
    CHECK(line(c, CurvePoint::infinity(), CurvePoint::infinity()) == EllFn::constant(c, 1));
    const auto two = testing::full_two();
    CHECK(line(two, {1, 0}, {1, 0}) == EllFn(two, Poly::linear(1)));
    CHECK_THROWS_AS(line(c, {1, 1}, {5, 5}), PointNotOnCurve);

    SUBCASE("vanishes at p, q and the third intersection")
    {
        for (const auto& rc : testing::ranked_curves()) {
            const auto pts = testing::multiples(rc.curve, rc.free, 4);
            for (const auto& p : pts) {
                for (const auto& q : pts) {
                    if (p.is_infinity() || q.is_infinity()) continue;
                    const EllFn l = line(rc.curve, p, q);
                    CHECK(vanishes_at(l, p));
                    CHECK(vanishes_at(l, q));
                    const CurvePoint third = negate(rc.curve, add(rc.curve, p, q));
                    if (!third.is_infinity()) CHECK(vanishes_at(l, third));
                    CHECK(order_at(l, CurvePoint::infinity()) == (third.is_infinity() ? -2 : -3));
                }
            }
        }
    }
}

TEST_CASE("sum_witness and f_function divisors")
{
    std::mt19937 rng(41);
    for (const auto& rc : testing::ranked_curves()) {
        const auto& c = rc.curve;
        std::vector<CurvePoint> pool = testing::multiples(c, rc.free, 3);
        for (unsigned k = 1; k < rc.torsion_order; ++k) pool.push_back(multiply(c, k, CurvePoint(0, 0)));
        for (const auto& p1 : pool) {
            for (const auto& p2 : pool) {
                CHECK(orders_match(sum_witness(c, p1, p2), sum_witness_divisor(c, p1, p2)));
                CHECK(orders_match(f_function(c, p1, p2), f_function_divisor(c, p1, p2)));
                CHECK(sum_witness_divisor(c, p1, p2).degree() == 0);
            }
        }
    }
}

TEST_CASE("f_function on the examples")
{
    SUBCASE("hyperelliptic: f is 1/x exactly")
    {
        const auto c = testing::hyper();
        CHECK(f_function(c, {0, 0}, {0, 0}) == EllFn::x(c).inverse());
    }
    SUBCASE("index-5 curve")
    {
        const auto c = e1();
        const EllFn f1 = f_function(c, {5, 5}, {5, 5});
        CHECK(proportional(f1, EllFn(c, X - Poly(16)) / EllFn(c, Poly{-20, 5}, Poly(-1))));
        CHECK(f_function(c, CurvePoint::infinity(), {5, 5}) == EllFn::constant(c, 1));
    }
    SUBCASE("index-5 curve translates")
    {
        const auto c = e1();
        const CurvePoint g{5, 5};
        const EllFn f1 = f_function(c, g, g);
        auto lin = [&](long cx, long cy, long c0) { return EllFn(c, Poly{c0, cx}, Poly(cy)); };
        CHECK(proportional(translate(f1, g), lin(5, -1, -20) / lin(6, 1, -35)));
        CHECK(proportional(translate(f1, multiply(c, 2, g)), lin(5, 1, -19) / lin(6, -1, -36)));
        CHECK(proportional(translate(f1, multiply(c, 3, g)), EllFn(c, X - Poly(16)) / lin(-5, -1, 19)));
        CHECK(translate(f1, multiply(c, 4, g)) == EllFn(c, Poly{Rat(Integer(-5), Integer(121)), Rat(Integer(1), Integer(121))}));
        // a translate of f keeps its double pole
        CHECK(order_at(translate(f1, multiply(c, 3, g)), multiply(c, 4, g)) == -2);
    }
}

TEST_CASE("two_cocycle")
{
    SUBCASE("hyperelliptic table")
    {
        const RationalCocycle rc(testing::hyper(), 2, {0, 0});
        const TwoCocycle table = two_cocycle(rc, {0, 0});
        CHECK(table.at(0, 0) == Rat(1));
        CHECK(table.at(0, 1) == Rat(1));
        CHECK(table.at(1, 0) == Rat(1));
        CHECK(table.at(1, 1) == Rat(Integer(-1), Integer(48)));
        CHECK(cyclic_reduce(table) == Rat(Integer(-1), Integer(48)));
    }
    SUBCASE("examples are normalized 2-cocycles")
    {
        const RationalCocycle r1(e1(), 5, {5, 5});
        for (unsigned k = 0; k < 5; ++k) CHECK(verify_two_cocycle(two_cocycle(r1, multiply(e1(), k, CurvePoint(5, 5)))));
        const RationalCocycle r2(e2(), 4, {8, -27});
        for (const auto& p : {CurvePoint(8, 18), CurvePoint(-1, 0), CurvePoint(-2, 3), CurvePoint::infinity()}) {
            CHECK(verify_two_cocycle(two_cocycle(r2, p)));
        }
    }
    SUBCASE("the zero point gives the trivial table")
    {
        const RationalCocycle rc(e1(), 5, {5, 5});
        CHECK(two_cocycle(rc, CurvePoint::infinity()) == TwoCocycle(5));
    }
    SUBCASE("perturbations are detected")
    {
        const RationalCocycle rc(e1(), 5, {5, 5});
        TwoCocycle t = two_cocycle(rc, {5, 5});
        t.set(2, 3, t.at(2, 3) * Rat(2));
        CHECK_FALSE(verify_two_cocycle(t));
        TwoCocycle u(3);
        u.set(0, 1, Rat(3));
        CHECK_FALSE(verify_two_cocycle(u));
    }
    SUBCASE("scales are validated")
    {
        const RationalCocycle rc(testing::hyper(), 2, {0, 0});
        const std::vector<Rat> bad_first{Rat(2), Rat(3)}, wrong_size{Rat(1)}, zero{Rat(1), Rat(0)};
        CHECK_THROWS_AS(two_cocycle(rc, {0, 0}, bad_first), InvalidArgument);
        CHECK_THROWS_AS(two_cocycle(rc, {0, 0}, wrong_size), InvalidArgument);
        CHECK_THROWS_AS(two_cocycle(rc, {0, 0}, zero), InvalidArgument);
    }
}

TEST_CASE("rescaling changes b by lambda_1^m")
{
    std::mt19937 rng(43);
    const RationalCocycle r1(e1(), 5, {5, 5});
    const RationalCocycle r2(e2(), 4, {8, -27});
    for (const auto* rc : {&r1, &r2}) {
        const CurvePoint p = rc->gamma(1);
        const Rat b = cyclic_reduce(two_cocycle(*rc, p));
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rat> scales{Rat(1)};
            for (unsigned i = 1; i < rc->m(); ++i) scales.push_back(testing::random_nonzero_rat(rng, 30));
            const TwoCocycle t = two_cocycle(*rc, p, scales);
            CHECK(verify_two_cocycle(t));
            CHECK(cyclic_reduce(t) == b * scales[1].pow(rc->m()));
            CHECK(is_mth_power(cyclic_reduce(t) / b, rc->m()));
        }
    }
}

TEST_CASE("symbolic table matches pointwise evaluation")
{
    for (const auto& ranked : testing::ranked_curves()) {
        const unsigned m = ranked.torsion_order;
        const RationalCocycle rc(ranked.curve, m, {0, 0});
        const auto samples = testing::multiples(ranked.curve, ranked.free, 5);
        for (const auto& p : {ranked.free, CurvePoint(0, 0), add(ranked.curve, ranked.free, CurvePoint(0, 0))}) {
            const TwoCocycle table = two_cocycle(rc, p);
            CHECK(verify_two_cocycle(table));
            std::vector<EllFn> fs;
            for (unsigned i = 0; i < m; ++i) fs.push_back(f_function(ranked.curve, rc.gamma(i), p));
            int compared = 0;
            for (unsigned i = 0; i < m; ++i) {
                for (unsigned j = 0; j < m; ++j) {
                    for (const auto& at : samples) {
                        if (at.is_infinity()) continue;
                        if (const auto v = pointwise_entry(rc, fs, i, j, at)) {
                            CHECK(*v == table.at(i, j));
                            ++compared;
                        }
                    }
                }
            }
            CHECK(compared >= static_cast<int>(m * m));
        }
    }
}

TEST_CASE("pairing")
{
    SUBCASE("index-5 example: b times 11 is a fifth power")
    {
        const RationalCocycle rc(e1(), 5, {5, 5});
        const auto alg = pairing(rc, {5, 5}, ExtensionDescriptor::cyclotomic(11, {10}));
        CHECK(is_mth_power(alg.b_raw * Rat(11), 5));
        CHECK(mth_power_free_part(alg.b_raw, 5) == Rat(14641));
    }
    SUBCASE("noncyclic example")
    {
        const RationalCocycle rc(e2(), 4, {8, -27});
        const auto ext = ExtensionDescriptor::cyclotomic(5, {});
        const auto a = pairing(rc, {8, 18}, ext), b = pairing(rc, {-1, 0}, ext);
        CHECK(is_mth_power(a.b_raw / Rat(405), 4));
        CHECK(is_mth_power(b.b_raw / Rat(-81), 4));
        CHECK(a.b_normalized == Rat(5));
        CHECK(b.b_normalized == Rat(-1));
    }
    SUBCASE("degree mismatch and the trivial point")
    {
        const RationalCocycle rc(e1(), 5, {5, 5});
        CHECK_THROWS_AS(pairing(rc, {5, 5}, ExtensionDescriptor::quadratic(2)), InvalidArgument);
        const auto alg = pairing(rc, CurvePoint::infinity(), ExtensionDescriptor::cyclotomic(11, {10}));
        CHECK(alg.b_raw == Rat(1));
        CHECK(classify(alg).status == ClassStatus::Trivial);
    }
    SUBCASE("m = 2 classes are multiplicative on the torsion of y^2 = x^3 - x")
    {
        const auto c = testing::full_two();
        const std::vector<CurvePoint> tors{CurvePoint::infinity(), {0, 0}, {1, 0}, {-1, 0}};
        for (const auto& t : {CurvePoint(0, 0), CurvePoint(1, 0), CurvePoint(-1, 0)}) {
            const RationalCocycle rc(c, 2, t);
            for (long d : {-1L, 2L, 3L, -5L, 6L}) {
                const auto ext = ExtensionDescriptor::quadratic(d);
                for (const auto& p1 : tors) {
                    for (const auto& p2 : tors) {
                        const auto a1 = pairing(rc, p1, ext), a2 = pairing(rc, p2, ext);
                        const auto sum = pairing(rc, add(c, p1, p2), ext);
                        const auto product = CyclicAlgebraClass::make(2, ext, a1.b_raw * a2.b_raw);
                        CHECK(quaternion_class_equal(sum, product));
                    }
                }
            }
        }
    }
}

TEST_CASE("relative_brauer")
{
    SUBCASE("quadratic m = 2 gets an exact group structure")
    {
        const auto c = testing::full_two();
        const RationalCocycle rc(c, 2, {0, 0});
        for (long d : {-1L, 2L, 3L, 5L, -6L}) {
            const auto ext = ExtensionDescriptor::quadratic(d);
            const auto pres = relative_brauer(rc, {{{0, 0}, 2}, {{1, 0}, 2}}, ext);
            REQUIRE(pres.entries.size() == 2);
            REQUIRE(pres.group_structure.has_value());
            CHECK(pres.order_bound == 2u);
            const auto& a = pres.entries[0].algebra;
            const auto& b = pres.entries[1].algebra;
            const bool ta = quaternion_is_split(Rat(Integer(d)), a.b_raw);
            const bool tb = quaternion_is_split(Rat(Integer(d)), b.b_raw);
            const bool same = quaternion_class_equal(a, b);
            std::size_t rank = (ta && tb) ? 0 : ((ta || tb || same) ? 1 : 2);
            CHECK(pres.group_structure->size() == rank);
            CHECK((pres.entries[0].verdict.status == ClassStatus::Trivial) == ta);
        }
    }
    SUBCASE("cyclotomic runs report a bound only")
    {
        const RationalCocycle rc(e1(), 5, {5, 5});
        const auto pres = relative_brauer(rc, {{{5, 5}, 5}}, ExtensionDescriptor::cyclotomic(11, {10}));
        CHECK_FALSE(pres.group_structure.has_value());
        CHECK(pres.order_bound == 5u);
        REQUIRE(pres.entries.size() == 1);
        CHECK(pres.entries[0].algebra.b_normalized == Rat(14641));
        CHECK(pres.entries[0].verdict.status == ClassStatus::Undetermined);
    }
}
