#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relbr/brauer.hpp"
#include "relbr/cli.hpp"
#include "relbr/cocycle.hpp"
#include "relbr/errors.hpp"
#include "relbr/factor.hpp"
#include "relbr/torsion.hpp"

namespace py = pybind11;

// Rat <-> fractions.Fraction; ints are accepted on input, floats are rejected.
namespace pybind11::detail {
template <>
struct type_caster<relbr::Rat> {
    PYBIND11_TYPE_CASTER(relbr::Rat, const_name("fractions.Fraction"));

    bool load(handle src, bool)
    {
        if (PyFloat_Check(src.ptr())) return false;
        if (PyLong_Check(src.ptr())) {
            value = relbr::Rat(relbr::Integer(py::str(src).cast<std::string>()));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
        const auto num = py::str(src.attr("numerator")).cast<std::string>();
        const auto den = py::str(src.attr("denominator")).cast<std::string>();
        value = relbr::Rat(relbr::Integer(num), relbr::Integer(den));
        return true;
    }

    static handle cast(const relbr::Rat& r, return_value_policy, handle)
    {
        static const py::object fraction = py::module_::import("fractions").attr("Fraction");
        const py::object num = py::int_(py::str(r.num().get_str()));
        const py::object den = py::int_(py::str(r.den().get_str()));
        return fraction(num, den).release();
    }
};
}  // namespace pybind11::detail

namespace {

using namespace relbr;

using PyPoint = std::optional<std::pair<Rat, Rat>>;

CurvePoint to_point(const PyPoint& p) { return p ? CurvePoint(p->first, p->second) : CurvePoint::infinity(); }

PyPoint from_point(const CurvePoint& p)
{
    if (p.is_infinity()) return std::nullopt;
    return std::make_pair(p.x(), p.y());
}

WeierstrassCurve to_curve(const std::vector<Rat>& a)
{
    if (a.size() == 2) return WeierstrassCurve::short_form(a[0], a[1]);
    if (a.size() != 5) throw InvalidArgument("a curve is [a1, a2, a3, a4, a6] or [A, B]");
    return {a[0], a[1], a[2], a[3], a[4]};
}

py::dict torsion(const std::vector<Rat>& coeffs)
{
    const TorsionGroup t = torsion_subgroup(to_curve(coeffs));
    py::list gens, elements;
    for (const auto& [p, n] : t.generators) gens.append(py::make_tuple(from_point(p), n));
    for (const auto& p : t.elements) elements.append(from_point(p));
    py::dict out;
    out["structure"] = t.structure();
    out["invariants"] = t.invariants;
    out["generators"] = gens;
    out["elements"] = elements;
    return out;
}

std::vector<std::vector<Rat>> cocycle_table(const std::vector<Rat>& coeffs, unsigned m, const PyPoint& t, const PyPoint& p)
{
    const RationalCocycle rc(to_curve(coeffs), m, to_point(t));
    const TwoCocycle table = two_cocycle(rc, to_point(p));
    std::vector<std::vector<Rat>> out(m, std::vector<Rat>(m));
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) out[i][j] = table.at(i, j);
    }
    return out;
}

py::dict pairing_class(const std::vector<Rat>& coeffs, unsigned m, const PyPoint& t, const PyPoint& p, const std::string& ext)
{
    const RationalCocycle rc(to_curve(coeffs), m, to_point(t));
    const CyclicAlgebraClass alg = pairing(rc, to_point(p), cli::parse_extension(ext));
    const ClassVerdict verdict = classify(alg);
    py::dict out;
    out["b_raw"] = alg.b_raw;
    out["b_normalized"] = alg.b_normalized;
    out["extension"] = alg.ext.str();
    out["status"] = to_string(verdict.status);
    out["witness"] = verdict.witness ? py::object(py::str(verdict.witness->str())) : py::object(py::none());
    return out;
}

Place to_place(long p) { return p == 0 ? Place::infinity() : Place::prime(Integer(p)); }

}  // namespace

PYBIND11_MODULE(_relbrauer, m)
{
    m.doc() = "Exact relative Brauer group computations for genus one curves of cyclic type";

    py::register_exception<Error>(m, "RelbrError", PyExc_ValueError);

    m.def("discriminant", [](const std::vector<Rat>& c) { return to_curve(c).discriminant(); }, py::arg("curve"));
    m.def("contains", [](const std::vector<Rat>& c, const PyPoint& p) { return to_curve(c).contains(to_point(p)); },
          py::arg("curve"), py::arg("point"));
    m.def("add", [](const std::vector<Rat>& c, const PyPoint& p, const PyPoint& q) {
        return from_point(add(to_curve(c), to_point(p), to_point(q)));
    }, py::arg("curve"), py::arg("p"), py::arg("q"));
    m.def("multiply", [](const std::vector<Rat>& c, long n, const PyPoint& p) {
        return from_point(multiply(to_curve(c), n, to_point(p)));
    }, py::arg("curve"), py::arg("n"), py::arg("point"));
    m.def("point_order", [](const std::vector<Rat>& c, const PyPoint& p) { return point_order(to_curve(c), to_point(p)); },
          py::arg("curve"), py::arg("point"));
    m.def("torsion", &torsion, py::arg("curve"));
    m.def("cocycle_table", &cocycle_table, py::arg("curve"), py::arg("m"), py::arg("t"), py::arg("p"));
    m.def("pairing", &pairing_class, py::arg("curve"), py::arg("m"), py::arg("t"), py::arg("p"), py::arg("ext"));
    m.def("mth_power_free_part", [](const Rat& r, unsigned k) { return mth_power_free_part(r, k); }, py::arg("r"), py::arg("m"));
    m.def("hilbert_symbol", [](const Rat& a, const Rat& b, long p) { return hilbert_symbol(a, b, to_place(p)); },
          py::arg("a"), py::arg("b"), py::arg("place"), "Local symbol (a, b)_v; place 0 is the real place.");
    m.def("quaternion_is_split", [](const Rat& a, const Rat& b) { return quaternion_is_split(a, b); }, py::arg("a"), py::arg("b"));
    m.def("report", [](const std::string& command, const std::string& curve, const std::string& t, unsigned mm,
                       const std::string& p, const std::string& ext, const std::string& gens) {
        cli::JobSpec job;
        if (command == "torsion") job.command = cli::Command::Torsion;
        else if (command == "pairing") job.command = cli::Command::Pairing;
        else if (command == "relbr") job.command = cli::Command::RelBr;
        else throw InvalidArgument("unknown command " + command);
        job.curve = curve;
        job.t = t;
        job.m = mm;
        job.p = p;
        job.ext = ext;
        job.gens = gens;
        return cli::render_json(cli::build_report(job));
    }, py::arg("command"), py::arg("curve"), py::arg("t") = "O", py::arg("m") = 1, py::arg("p") = "O", py::arg("ext") = "",
       py::arg("gens") = "auto", "The CLI's JSON report as a string.");
}
