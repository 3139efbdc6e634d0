#include "relbr/cli.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "relbr/cocycle.hpp"
#include "relbr/errors.hpp"
#include "relbr/torsion.hpp"

namespace relbr::cli {

namespace {

std::string ascii_minus(std::string_view text)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            out += '-';
            i += 2;
        } else {
            out += text[i];
        }
    }
    return out;
}

struct Token {
    std::string text;
    std::size_t position;
};

// Splits on whitespace and the given separators, remembering offsets.
std::vector<Token> tokenize(std::string_view text, std::string_view separators)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto is_sep = [&](char ch) {
            return std::isspace(static_cast<unsigned char>(ch)) || separators.find(ch) != std::string_view::npos;
        };
        while (i < text.size() && is_sep(text[i])) ++i;
        const std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) ++i;
        if (i > start) out.push_back({std::string(text.substr(start, i - start)), start});
    }
    return out;
}

Rat parse_rat_at(const Token& tok)
{
    try {
        return Rat::parse(tok.text);
    } catch (const ParseError& e) {
        throw ParseError("bad rational '" + tok.text + "'", tok.position + e.position());
    }
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// "x,y" or "(x,y)" as a pair of rationals, not yet validated against a curve.
std::pair<Rat, Rat> parse_coordinates(std::string_view text, std::size_t offset)
{
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced parenthesis in point", offset);
        body = body.substr(1, body.size() - 2);
        ++offset;
    }
    const auto toks = tokenize(body, ",");
    if (toks.size() != 2) throw ParseError("point needs two coordinates", offset);
    return {parse_rat_at({toks[0].text, offset + toks[0].position}), parse_rat_at({toks[1].text, offset + toks[1].position})};
}

std::string order_text(unsigned order)
{
    return order == 0 ? "infinite" : std::to_string(order);
}

std::array<std::string, 5> curve_strings(const WeierstrassCurve& c)
{
    return {c.a1().str(), c.a2().str(), c.a3().str(), c.a4().str(), c.a6().str()};
}

ResultEntry make_entry(const CurvePoint& point, unsigned order, const CyclicAlgebraClass& alg, const ClassVerdict& verdict)
{
    ResultEntry e;
    e.point = point.str();
    e.order = order;
    e.b_raw = alg.b_raw.str();
    e.b_normalized = alg.b_normalized.str();
    e.status = to_string(verdict.status);
    if (verdict.witness) e.witness = verdict.witness->str();
    return e;
}

}  // namespace

WeierstrassCurve parse_curve(std::string_view raw)
{
    const std::string text = ascii_minus(raw);
    const std::string_view body = trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw ParseError("unterminated '[' in curve", text.size());
        const std::size_t offset = static_cast<std::size_t>(body.data() - text.data()) + 1;
        auto toks = tokenize(body.substr(1, body.size() - 2), ",");
        if (toks.size() != 2) throw ParseError("short form needs [A,B]", offset);
        for (auto& t : toks) t.position += offset;
        return WeierstrassCurve::short_form(parse_rat_at(toks[0]), parse_rat_at(toks[1]));
    }
    const auto toks = tokenize(text, ",");
    if (toks.size() != 5) throw ParseError("curve needs five coefficients a1 a2 a3 a4 a6", toks.empty() ? 0 : toks.back().position);
    return {parse_rat_at(toks[0]), parse_rat_at(toks[1]), parse_rat_at(toks[2]), parse_rat_at(toks[3]), parse_rat_at(toks[4])};
}

CurvePoint parse_point(std::string_view raw, const WeierstrassCurve& curve)
{
    const std::string text = ascii_minus(raw);
    const std::string_view body = trim(text);
    if (body.empty()) throw ParseError("empty point", 0);
    const std::size_t offset = static_cast<std::size_t>(body.data() - text.data());
    if (body == "O" || body == "-O") return CurvePoint::infinity();
    if (body.front() == '-') {
        const std::string_view rest = trim(body.substr(1));
        if (!rest.empty() && rest.front() == '(') {
            const auto [x, y] = parse_coordinates(rest, offset + 1);
            const CurvePoint p{x, y};
            return negate(curve, p);  // throws PointNotOnCurve
        }
        const auto [x, y] = parse_coordinates(body, offset);
        if (const CurvePoint literal{x, y}; curve.contains(literal)) return literal;
        const CurvePoint unsigned_point{-x, y};
        if (curve.contains(unsigned_point)) return negate(curve, unsigned_point);
        throw PointNotOnCurve("neither (" + x.str() + "," + y.str() + ") nor its negation reading lies on " + curve.str());
    }
    const auto [x, y] = parse_coordinates(body, offset);
    const CurvePoint p{x, y};
    curve.require(p);
    return p;
}

ExtensionDescriptor parse_extension(std::string_view raw)
{
    const std::string text = ascii_minus(raw);
    const std::string_view body = trim(text);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError("extension must look like quad:d or cyclo:N:h1,h2,...", 0);
    const std::string_view kind = body.substr(0, colon);
    const std::string_view rest = body.substr(colon + 1);
    if (kind == "quad" || kind == "quadratic") {
        const Rat d = parse_rat_at({std::string(trim(rest)), colon + 1});
        if (!d.is_integer()) throw ParseError("quadratic parameter must be an integer", colon + 1);
        return ExtensionDescriptor::quadratic(d.num());
    }
    if (kind == "cyclo" || kind == "cyclotomic") {
        const auto second = rest.find(':');
        const std::string_view conductor_text = rest.substr(0, second);
        const Rat n = parse_rat_at({std::string(trim(conductor_text)), colon + 1});
        if (!n.is_integer() || n.sign() <= 0 || !n.num().fits_ulong_p()) throw ParseError("bad conductor", colon + 1);
        std::vector<unsigned long> gens;
        if (second != std::string_view::npos) {
            const std::size_t offset = colon + 2 + second;
            for (const auto& tok : tokenize(rest.substr(second + 1), ",{}")) {
                const Rat h = parse_rat_at({tok.text, offset + tok.position});
                if (!h.is_integer()) throw ParseError("subgroup generator must be an integer", offset + tok.position);
                Integer r = h.num() % n.num();
                if (r < 0) r += n.num();
                gens.push_back(r.get_ui());
            }
        }
        return ExtensionDescriptor::cyclotomic(n.num().get_ui(), gens);
    }
    throw ParseError("unknown extension kind '" + std::string(kind) + "'", 0);
}

std::optional<std::vector<CurvePoint>> parse_generators(std::string_view text, const WeierstrassCurve& curve)
{
    if (trim(text) == "auto") return std::nullopt;
    std::vector<CurvePoint> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find(';', start);
        const std::string_view piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (!trim(piece).empty()) out.push_back(parse_point(piece, curve));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

void to_json(nlohmann::json& j, const Report& r)
{
    j = nlohmann::json::object();
    j["schema"] = r.schema;
    j["command"] = r.command;
    j["curve"] = {{"a1", r.curve[0]}, {"a2", r.curve[1]}, {"a3", r.curve[2]}, {"a4", r.curve[3]}, {"a6", r.curve[4]}};
    j["equation"] = r.equation;
    if (r.cocycle) j["cocycle"] = {{"m", r.cocycle->m}, {"t", r.cocycle->t}};
    if (r.extension) j["extension"] = *r.extension;
    if (r.torsion) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& [p, n] : r.torsion->generators) gens.push_back({{"point", p}, {"order", n}});
        j["torsion"] = {{"structure", r.torsion->structure}, {"generators", gens}, {"elements", r.torsion->elements}};
    }
    nlohmann::json results = nlohmann::json::array();
    for (const auto& e : r.results) {
        nlohmann::json item{{"point", e.point}, {"order", e.order}, {"b_raw", e.b_raw}, {"b_normalized", e.b_normalized}, {"status", e.status}};
        if (e.witness) item["witness"] = *e.witness;
        results.push_back(std::move(item));
    }
    j["results"] = std::move(results);
    if (r.cocycle_table) j["cocycle_table"] = *r.cocycle_table;
    if (r.group_structure) j["group_structure"] = *r.group_structure;
    if (r.order_bound) j["order_bound"] = *r.order_bound;
    j["rank_zero_assumed"] = r.rank_zero_assumed;
}

void from_json(const nlohmann::json& j, Report& r)
{
    r = Report{};
    r.schema = j.at("schema").get<std::string>();
    r.command = j.at("command").get<std::string>();
    const auto& c = j.at("curve");
    r.curve = {c.at("a1").get<std::string>(), c.at("a2").get<std::string>(), c.at("a3").get<std::string>(),
               c.at("a4").get<std::string>(), c.at("a6").get<std::string>()};
    r.equation = j.at("equation").get<std::string>();
    if (j.contains("cocycle")) r.cocycle = CocycleSection{j["cocycle"].at("m").get<unsigned>(), j["cocycle"].at("t").get<std::string>()};
    if (j.contains("extension")) r.extension = j["extension"].get<std::string>();
    if (j.contains("torsion")) {
        TorsionSection t;
        const auto& tj = j["torsion"];
        t.structure = tj.at("structure").get<std::string>();
        for (const auto& g : tj.at("generators")) t.generators.emplace_back(g.at("point").get<std::string>(), g.at("order").get<unsigned>());
        t.elements = tj.at("elements").get<std::vector<std::string>>();
        r.torsion = std::move(t);
    }
    for (const auto& item : j.at("results")) {
        ResultEntry e;
        e.point = item.at("point").get<std::string>();
        e.order = item.at("order").get<unsigned>();
        e.b_raw = item.at("b_raw").get<std::string>();
        e.b_normalized = item.at("b_normalized").get<std::string>();
        e.status = item.at("status").get<std::string>();
        if (item.contains("witness")) e.witness = item["witness"].get<std::string>();
        r.results.push_back(std::move(e));
    }
    if (j.contains("cocycle_table")) r.cocycle_table = j["cocycle_table"].get<std::vector<std::vector<std::string>>>();
    if (j.contains("group_structure")) r.group_structure = j["group_structure"].get<std::vector<unsigned>>();
    if (j.contains("order_bound")) r.order_bound = j["order_bound"].get<unsigned>();
    r.rank_zero_assumed = j.at("rank_zero_assumed").get<bool>();
}

Report build_report(const JobSpec& job)
{
    const WeierstrassCurve curve = parse_curve(job.curve);
    Report r;
    r.curve = curve_strings(curve);
    r.equation = curve.str();

    if (job.command == Command::Torsion) {
        r.command = "torsion";
        const TorsionGroup group = torsion_subgroup(curve);
        TorsionSection t;
        t.structure = group.structure();
        for (const auto& [p, n] : group.generators) t.generators.emplace_back(p.str(), n);
        for (const auto& p : group.elements) t.elements.push_back(p.str());
        r.torsion = std::move(t);
        return r;
    }

    const CurvePoint t = parse_point(job.t, curve);
    const RationalCocycle rc(curve, job.m, t);
    const ExtensionDescriptor ext = parse_extension(job.ext);
    r.cocycle = CocycleSection{job.m, t.str()};
    r.extension = ext.str();
    r.order_bound = job.m;

    if (job.command == Command::Pairing) {
        r.command = "pairing";
        const CurvePoint p = parse_point(job.p, curve);
        const TwoCocycle table = two_cocycle(rc, p);
        std::vector<std::vector<std::string>> rows;
        for (unsigned i = 0; i < job.m; ++i) {
            std::vector<std::string> row;
            for (unsigned j = 0; j < job.m; ++j) row.push_back(table.at(i, j).str());
            rows.push_back(std::move(row));
        }
        r.cocycle_table = std::move(rows);
        const CyclicAlgebraClass alg = CyclicAlgebraClass::make(job.m, ext, cyclic_reduce(table));
        r.results.push_back(make_entry(p, point_order(curve, p).value_or(0), alg, classify(alg)));
        return r;
    }

    r.command = "relbr";
    std::vector<std::pair<CurvePoint, unsigned>> gens;
    if (const auto explicit_gens = parse_generators(job.gens, curve)) {
        for (const auto& p : *explicit_gens) gens.emplace_back(p, point_order(curve, p).value_or(0));
    } else {
        r.rank_zero_assumed = true;
        gens = torsion_subgroup(curve).generators;
    }
    const BrauerPresentation pres = relative_brauer(rc, gens, ext);
    for (const auto& e : pres.entries) r.results.push_back(make_entry(e.point, e.point_order, e.algebra, e.verdict));
    r.group_structure = pres.group_structure;
    return r;
}

std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << "curve: " << r.equation << "\n";
    if (r.torsion) {
        os << "torsion subgroup: " << r.torsion->structure << "\n";
        for (const auto& [p, n] : r.torsion->generators) os << "  generator " << p << " of order " << n << "\n";
        os << "  elements:";
        for (const auto& p : r.torsion->elements) os << " " << p;
        os << "\n";
        return os.str();
    }
    os << "cocycle: m = " << r.cocycle->m << ", gamma(sigma) = " << r.cocycle->t << "\n";
    os << "extension: " << *r.extension << "\n";
    if (r.rank_zero_assumed) os << "generators: torsion subgroup (rank 0 assumed)\n";
    if (r.cocycle_table) {
        os << "cocycle table c(sigma^i, sigma^j):\n";
        for (const auto& row : *r.cocycle_table) {
            os << " ";
            for (const auto& v : row) os << " " << v;
            os << "\n";
        }
    }
    for (const auto& e : r.results) {
        os << "a(" << e.point << ") [order " << order_text(e.order) << "]: (L/Q, sigma, " << e.b_raw << ")"
           << " = (L/Q, sigma, " << e.b_normalized << ")  status: " << e.status;
        if (e.witness) os << " (witness " << *e.witness << ")";
        os << "\n";
    }
    if (r.group_structure) {
        os << "relative Brauer group: ";
        if (r.group_structure->empty()) os << "trivial";
        for (std::size_t i = 0; i < r.group_structure->size(); ++i) os << (i ? " x " : "") << "Z/" << (*r.group_structure)[i];
        os << "\n";
    } else if (r.command == "relbr") {
        os << "relative Brauer group: generated by the classes above; each class has order dividing " << *r.order_bound << "\n";
    }
    return os.str();
}

std::string render_json(const Report& r)
{
    return nlohmann::json(r).dump(2) + "\n";
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err)
{
    try {
        const Report report = build_report(job);
        if (report.rank_zero_assumed) {
            err << "WARNING: --gens auto uses the torsion subgroup as generators of E(Q); "
                   "this assumes E(Q) has rank 0, which is not verified.\n";
        }
        out << (job.output == OutputFormat::Json ? render_json(report) : render_text(report));
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const SingularCurve& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PointNotOnCurve& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const FactoringLimitExceeded& e) {
        err << "computational limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace relbr::cli
