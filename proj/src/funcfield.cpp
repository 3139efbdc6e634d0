#include "relbr/funcfield.hpp"

#include <algorithm>
#include <vector>

#include "relbr/errors.hpp"

namespace relbr {

namespace {

// h(x) = a1 x + a3 and F(x) = x^3 + a2 x^2 + a4 x + a6, so y^2 = F - h y.
Poly h_poly(const WeierstrassCurve& c) { return Poly{c.a3(), c.a1()}; }
Poly f_poly(const WeierstrassCurve& c) { return Poly{c.a6(), c.a4(), c.a2(), Rat(1)}; }

void require_same_curve(const EllFn& f, const EllFn& g)
{
    if (!(f.curve() == g.curve())) throw InvalidArgument("functions live on different curves");
}

// A truncated power series sum c_k u^k, k < size().
using Series = std::vector<Rat>;

Series series_mul(const Series& s, const Series& t, std::size_t prec)
{
    Series out(prec);
    for (std::size_t i = 0; i < std::min(prec, s.size()); ++i) {
        if (s[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < prec && j < t.size(); ++j) out[i + j] += s[i] * t[j];
    }
    return out;
}

Series series_of_poly(const Poly& p, const Series& x, std::size_t prec)
{
    Series acc(prec);
    for (int i = p.degree(); i >= 0; --i) {
        acc = series_mul(acc, x, prec);
        acc[0] += p[static_cast<std::size_t>(i)];
    }
    return acc;
}

// Index of the first nonzero coefficient, or -1.
int leading_index(const Series& s)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
}

// Local expansions x(u), y(u) in a uniformizer u at the affine point P.
// Away from 2-torsion u = x - x0 and y is solved for; at 2-torsion u = y - y0
// and x is solved for.
std::pair<Series, Series> local_chart(const WeierstrassCurve& c, const CurvePoint& p, std::size_t prec)
{
    const Rat &x0 = p.x(), &y0 = p.y();
    const Poly h = h_poly(c).shifted(x0);
    const Poly F = f_poly(c).shifted(x0);
    const Rat dy = Rat(2) * y0 + h[0];
    Series xs(prec), ys(prec);
    if (!dy.is_zero()) {
        xs[0] = x0;
        if (prec > 1) xs[1] = 1;
        // Coefficient k of y^2 + h y - F = 0 is linear in y_k with slope dy.
        ys[0] = y0;
        for (std::size_t k = 1; k < prec; ++k) {
            Rat rhs = F[k];
            for (std::size_t i = 1; i < k; ++i) rhs -= ys[i] * ys[k - i];
            for (std::size_t i = 1; i <= k && i < 2; ++i) rhs -= h[i] * ys[k - i];
            ys[k] = rhs / dy;
        }
        return {xs, ys};
    }
    // With y = y0 + u and x = x0 + w(u): u^2 + w (a1 y0 - F1 + a1 u) - F2 w^2 - w^3 = 0.
    const Rat slope = F[1] - c.a1() * y0;  // nonzero on a nonsingular curve
    Series w(prec);
    for (std::size_t k = 2; k < prec; ++k) {
        Rat rhs = (k == 2) ? Rat(1) : Rat(0);
        rhs += c.a1() * w[k - 1];
        Rat sq, cube;
        for (std::size_t i = 2; i + 2 <= k; ++i) sq += w[i] * w[k - i];
        for (std::size_t i = 2; i + 4 <= k; ++i) {
            for (std::size_t j = 2; i + j + 2 <= k; ++j) cube += w[i] * w[j] * w[k - i - j];
        }
        rhs -= F[2] * sq + cube;
        w[k] = rhs / slope;
    }
    xs = w;
    xs[0] += x0;
    ys[0] = y0;
    if (prec > 1) ys[1] = 1;
    return {xs, ys};
}

struct LocalTerm {
    int order;
    Rat leading;
};

LocalTerm local_term(const EllFn& f, const CurvePoint& p)
{
    if (f.is_zero()) throw DivisionByZeroFunction("order of the zero function");
    f.curve().require(p);
    if (p.is_infinity()) {
        // weights: x has a double pole, y a triple pole
        const int wa = f.a().is_zero() ? 1 << 20 : -2 * f.a().degree();
        const int wb = f.b().is_zero() ? 1 << 20 : -2 * f.b().degree() - 3;
        const int wd = -2 * f.d().degree();
        if (wa < wb) return {wa - wd, f.a().lead() / f.d().lead()};
        // leading term involves y; the value is never finite and nonzero here
        return {wb - wd, Rat(0)};
    }
    const int deg_a = std::max(f.a().degree(), 0), deg_b = std::max(f.b().degree(), 0);
    const int bound = std::max({2 * deg_a, 2 * deg_b + 3, f.d().degree()});
    const auto prec = static_cast<std::size_t>(2 * bound + 3);
    const auto [xs, ys] = local_chart(f.curve(), p, prec);
    const Series num_a = series_of_poly(f.a(), xs, prec);
    const Series num = [&] {
        Series out = series_mul(series_of_poly(f.b(), xs, prec), ys, prec);
        for (std::size_t i = 0; i < prec; ++i) out[i] += num_a[i];
        return out;
    }();
    const Series den = series_of_poly(f.d(), xs, prec);
    const int vn = leading_index(num), vd = leading_index(den);
    if (vn < 0 || vd < 0) throw Error("local expansion precision exhausted");
    return {vn - vd, num[static_cast<std::size_t>(vn)] / den[static_cast<std::size_t>(vd)]};
}

}  // namespace

EllFn::EllFn(WeierstrassCurve curve, Poly a, Poly b, Poly d)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)), d_(std::move(d))
{
    if (d_.is_zero()) throw DivisionByZeroFunction("zero denominator");
    canonicalize();
}

void EllFn::canonicalize()
{
    if (is_zero()) {
        a_ = Poly();
        b_ = Poly();
        d_ = Poly(1);
        return;
    }
    const Poly g = poly_gcd(poly_gcd(a_, b_), d_);
    if (g.degree() > 0) {
        a_ = exact_div(a_, g);
        b_ = exact_div(b_, g);
        d_ = exact_div(d_, g);
    }
    const Rat scale = d_.lead().inverse();
    a_ *= scale;
    b_ *= scale;
    d_ *= scale;
}

EllFn EllFn::conjugate() const
{
    return {curve_, a_ - b_ * h_poly(curve_), -b_, d_};
}

EllFn EllFn::inverse() const
{
    if (is_zero()) throw DivisionByZeroFunction("inverse of the zero function");
    const Poly h = h_poly(curve_);
    const Poly norm = a_ * a_ - a_ * b_ * h - b_ * b_ * f_poly(curve_);
    return {curve_, d_ * (a_ - b_ * h), -(d_ * b_), norm};
}

EllFn operator+(const EllFn& f, const EllFn& g)
{
    require_same_curve(f, g);
    const Poly common = poly_gcd(f.d_, g.d_);
    const Poly fd = exact_div(f.d_, common), gd = exact_div(g.d_, common);
    return {f.curve_, f.a_ * gd + g.a_ * fd, f.b_ * gd + g.b_ * fd, f.d_ * gd};
}

EllFn operator*(const EllFn& f, const EllFn& g)
{
    require_same_curve(f, g);
    const Poly bb = f.b_ * g.b_;
    return {f.curve_, f.a_ * g.a_ + bb * f_poly(f.curve_), f.a_ * g.b_ + g.a_ * f.b_ - bb * h_poly(f.curve_), f.d_ * g.d_};
}

std::string EllFn::str() const
{
    std::string num;
    if (b_.is_zero()) {
        num = a_.str();
    } else if (a_.is_zero()) {
        num = b_.is_constant() ? (b_.lead() == Rat(1) ? "y" : b_.str() + "*y") : "(" + b_.str() + ")*y";
    } else {
        num = a_.str() + " + " + (b_.is_constant() ? b_.str() : "(" + b_.str() + ")") + "*y";
    }
    if (d_ == Poly(1)) return num;
    return "(" + num + ")/(" + d_.str() + ")";
}

EllFn compose(const Poly& p, const EllFn& x_value)
{
    EllFn acc = EllFn::constant(x_value.curve(), Rat(0));
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x_value + EllFn::constant(x_value.curve(), p[static_cast<std::size_t>(i)]);
    }
    return acc;
}

EvalResult eval_at(const EllFn& f, const CurvePoint& p)
{
    f.curve().require(p);
    if (f.is_zero()) return {EvalResult::Kind::Value, Rat(0)};
    if (!p.is_infinity()) {
        const Rat dv = f.d().eval(p.x());
        if (!dv.is_zero()) return {EvalResult::Kind::Value, (f.a().eval(p.x()) + f.b().eval(p.x()) * p.y()) / dv};
    }
    const LocalTerm term = local_term(f, p);
    if (term.order < 0) return EvalResult::pole();
    if (term.order > 0) return {EvalResult::Kind::Value, Rat(0)};
    return {EvalResult::Kind::Value, term.leading};
}

int order_at(const EllFn& f, const CurvePoint& p)
{
    return local_term(f, p).order;
}

EllFn translate(const EllFn& f, const CurvePoint& q)
{
    const WeierstrassCurve& c = f.curve();
    c.require(q);
    if (q.is_infinity()) return f;
    // P -> P + r with r = -q, via the generic chord through P and r.
    const CurvePoint r = negate(c, q);
    const Rat &x0 = r.x(), &y0 = r.y();
    const EllFn x = EllFn::x(c), y = EllFn::y(c);
    const EllFn lambda{c, Poly(-y0), Poly(1), Poly::linear(x0)};
    const EllFn nu = y - lambda * x;
    const EllFn x3 = lambda * lambda + c.a1() * lambda - EllFn::constant(c, c.a2() + x0) - x;
    const EllFn y3 = -((lambda + EllFn::constant(c, c.a1())) * x3) - nu - EllFn::constant(c, c.a3());
    return (compose(f.a(), x3) + compose(f.b(), x3) * y3) / compose(f.d(), x3);
}

std::optional<Rat> as_constant(const EllFn& f)
{
    if (!f.b().is_zero() || !f.a().is_constant() || f.d().degree() != 0) return std::nullopt;
    return f.a()[0];
}

bool vanishes_at(const EllFn& f, const CurvePoint& p)
{
    const EvalResult r = eval_at(f, p);
    return !r.is_pole() && r.value.is_zero();
}

bool has_pole_at(const EllFn& f, const CurvePoint& p)
{
    if (f.is_zero()) throw DivisionByZeroFunction("pole test on the zero function");
    return eval_at(f, p).is_pole();
}

FormalDivisor& FormalDivisor::add(const CurvePoint& p, int mult)
{
    const int total = (terms_[p] += mult);
    if (total == 0) terms_.erase(p);
    return *this;
}

int FormalDivisor::degree() const
{
    int d = 0;
    for (const auto& [p, m] : terms_) d += m;
    return d;
}

int FormalDivisor::multiplicity(const CurvePoint& p) const
{
    const auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

std::string FormalDivisor::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, m] : terms_) {
        if (!out.empty()) out += m < 0 ? " - " : " + ";
        else if (m < 0) out += "-";
        const int mag = m < 0 ? -m : m;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += p.str();
    }
    return out;
}

bool orders_match(const EllFn& f, const FormalDivisor& div)
{
    return std::all_of(div.terms().begin(), div.terms().end(),
                       [&f](const auto& term) { return order_at(f, term.first) == term.second; });
}

}  // namespace relbr
