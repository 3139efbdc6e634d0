#include <doctest.h>

#include <sstream>

#include "relbr/cli.hpp"
#include "relbr/errors.hpp"
#include "support.hpp"

using namespace relbr;
using namespace relbr::cli;

namespace {

JobSpec job(Command cmd, std::string curve)
{
    JobSpec j;
    j.command = cmd;
    j.curve = std::move(curve);
    return j;
}

JobSpec e1_job(Command cmd)
{
    JobSpec j = job(cmd, "0 -1 1 -10 -20");
    j.t = "5,5";
    j.m = 5;
    j.p = "5,5";
    j.ext = "cyclo:11:10";
    return j;
}

}  // namespace

TEST_CASE("parse_curve")
{
    CHECK(parse_curve("0 -1 1 -10 -20") == testing::e1());
    CHECK(parse_curve("0,-1,1,-10,-20") == testing::e1());
    CHECK(parse_curve("1, 1, 1, -10, -10") == testing::e2());
    CHECK(parse_curve("[-48,0]") == testing::hyper());
    CHECK(parse_curve("[ -1 , 0 ]") == testing::full_two());
    CHECK(parse_curve("0 0 0 −" "1 0") == testing::full_two());
    CHECK(parse_curve("0 0 0 -1/4 1/2").a4() == Rat(Integer(-1), Integer(4)));
    CHECK_THROWS_AS(parse_curve("0 0 0 1"), ParseError);
    CHECK_THROWS_AS(parse_curve("0 0 0 1 x"), ParseError);
    CHECK_THROWS_AS(parse_curve("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_curve("0 0 0 0 0"), SingularCurve);
    CHECK_THROWS_AS(parse_curve("0 0 0 1/0 0"), ParseError);
}

TEST_CASE("parse_point")
{
    const auto c1 = testing::e1();
    const auto c2 = testing::e2();
    CHECK(parse_point("O", c1).is_infinity());
    CHECK(parse_point("5,5", c1) == CurvePoint(5, 5));
    CHECK(parse_point("(16, 60)", c1) == CurvePoint(16, 60));
    CHECK(parse_point("-(5,5)", c1) == CurvePoint(5, -6));
    CHECK(parse_point("-8,18", c2) == negate(c2, CurvePoint(8, 18)));
    CHECK(parse_point("-1,0", c2) == CurvePoint(-1, 0));
    CHECK(parse_point("-13/4,9/8", c2) == CurvePoint(Rat(Integer(-13), Integer(4)), Rat(Integer(9), Integer(8))));
    CHECK_THROWS_AS(parse_point("5,6", c1), PointNotOnCurve);
    CHECK_THROWS_AS(parse_point("5", c1), ParseError);
    CHECK_THROWS_AS(parse_point("(5,5", c1), ParseError);
}

TEST_CASE("parse_extension and parse_generators")
{
    CHECK(parse_extension("quad:3") == ExtensionDescriptor::quadratic(Integer(3)));
    CHECK(parse_extension("quadratic:-1") == ExtensionDescriptor::quadratic(Integer(-1)));
    CHECK(parse_extension("cyclo:11:10") == ExtensionDescriptor::cyclotomic(11, {10}));
    CHECK(parse_extension("cyclotomic:11:{10}") == ExtensionDescriptor::cyclotomic(11, {10}));
    CHECK(parse_extension("cyclo:5") == ExtensionDescriptor::cyclotomic(5, {}));
    CHECK_THROWS_AS(parse_extension("cyclo:16:{1}"), InvalidArgument);
    CHECK_THROWS_AS(parse_extension("quad:4"), InvalidArgument);
    CHECK_THROWS_AS(parse_extension("cubic:7"), ParseError);
    CHECK_THROWS_AS(parse_extension("quad:"), ParseError);

    const auto c2 = testing::e2();
    CHECK_FALSE(parse_generators("auto", c2).has_value());
    const auto gens = parse_generators("8,18;-1,0", c2);
    REQUIRE(gens.has_value());
    CHECK(*gens == std::vector<CurvePoint>{{8, 18}, {-1, 0}});
}

TEST_CASE("exit codes")
{
    std::ostringstream out, err;
    CHECK(run(job(Command::Torsion, "0 -1 1 -10 -20"), out, err) == 0);
    CHECK(run(job(Command::Torsion, "0 0 0 0 0"), out, err) == 1);
    CHECK(run(job(Command::Torsion, "garbage"), out, err) == 1);
    JobSpec bad_t = e1_job(Command::Pairing);
    bad_t.t = "16,60";
    CHECK(run(bad_t, out, err) == 0);  // (16,60) = [3]g also has order 5
    bad_t.m = 3;
    CHECK(run(bad_t, out, err) == 1);
    JobSpec bad_ext = e1_job(Command::Pairing);
    bad_ext.ext = "quad:2";
    CHECK(run(bad_ext, out, err) == 1);
    JobSpec bad_p = e1_job(Command::Pairing);
    bad_p.p = "1,1";
    CHECK(run(bad_p, out, err) == 1);
    CHECK_FALSE(err.str().empty());
}

TEST_CASE("torsion report")
{
    const Report r = build_report(job(Command::Torsion, "1 1 1 -10 -10"));
    REQUIRE(r.torsion.has_value());
    CHECK(r.torsion->structure == "Z/2 x Z/4");
    CHECK(r.torsion->elements.size() == 8u);
    CHECK(r.command == "torsion");
    CHECK(r.curve == std::array<std::string, 5>{"1", "1", "1", "-10", "-10"});
    const Report e1 = build_report(job(Command::Torsion, "0 -1 1 -10 -20"));
    REQUIRE(e1.torsion->generators.size() == 1u);
    CHECK(e1.torsion->generators[0] == std::pair<std::string, unsigned>{"(5,5)", 5});
}

TEST_CASE("pairing report")
{
    JobSpec j = job(Command::Pairing, "[-48,0]");
    j.t = "0,0";
    j.m = 2;
    j.p = "0,0";
    j.ext = "quad:3";
    const Report r = build_report(j);
    REQUIRE(r.results.size() == 1u);
    CHECK(r.results[0].b_raw == "-1/48");
    CHECK(r.results[0].b_normalized == "-3");
    CHECK(r.results[0].status == "trivial");
    REQUIRE(r.cocycle_table.has_value());
    CHECK(*r.cocycle_table == std::vector<std::vector<std::string>>{{"1", "1"}, {"1", "-1/48"}});
}

TEST_CASE("relbr report")
{
    std::ostringstream out, err;
    JobSpec j = job(Command::RelBr, "1 1 1 -10 -10");
    j.t = "-8,18";
    j.m = 4;
    j.ext = "cyclo:5";
    j.gens = "8,18;-1,0";
    const Report r = build_report(j);
    REQUIRE(r.results.size() == 2u);
    CHECK(r.results[0].b_normalized == "5");
    CHECK(r.results[1].b_normalized == "-1");
    CHECK(r.results[0].order == 4u);
    CHECK(r.results[1].order == 2u);
    CHECK(r.order_bound == 4u);
    CHECK_FALSE(r.rank_zero_assumed);

    j.gens = "auto";
    CHECK(run(j, out, err) == 0);
    CHECK(err.str().find("rank 0") != std::string::npos);
    CHECK(build_report(j).rank_zero_assumed);
}

TEST_CASE("JSON output is lossless and deterministic")
{
    for (const JobSpec& j : {e1_job(Command::Torsion), e1_job(Command::Pairing), e1_job(Command::RelBr)}) {
        const Report r = build_report(j);
        const std::string text = render_json(r);
        CHECK(text == render_json(build_report(j)));
        CHECK(nlohmann::json::parse(text).get<Report>() == r);
        CHECK(nlohmann::json::parse(text)["schema"] == "1");
        CHECK_FALSE(render_text(r).empty());
    }
    JobSpec j = e1_job(Command::Pairing);
    j.output = OutputFormat::Json;
    std::ostringstream out, err;
    REQUIRE(run(j, out, err) == 0);
    const auto parsed = nlohmann::json::parse(out.str());
    CHECK(parsed["results"][0]["b_normalized"] == "14641");
    CHECK(parsed["results"][0]["status"] == "undetermined");
}
