#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relbr/brauer.hpp"
#include "relbr/curve.hpp"

namespace relbr::cli {

/// "a1 a2 a3 a4 a6" (whitespace or comma separated) or "[A,B]" for y^2 = x^3 + A x + B.
WeierstrassCurve parse_curve(std::string_view text);

/// "O", "x,y" or "(x,y)"; "-(x,y)" is the negation of (x,y). A bare "-x,y" is read
/// as the literal point when that lies on the curve, and as the negation of (x,y) otherwise.
CurvePoint parse_point(std::string_view text, const WeierstrassCurve& curve);

/// "quad:d" or "cyclo:N:h1,h2,..." (H generated by the h_i; empty list means H = {1}).
ExtensionDescriptor parse_extension(std::string_view text);

/// "auto" yields nullopt; otherwise a ';'-separated list of points.
std::optional<std::vector<CurvePoint>> parse_generators(std::string_view text, const WeierstrassCurve& curve);

enum class Command { Torsion, Pairing, RelBr };
enum class OutputFormat { Text, Json };

struct JobSpec {
    Command command = Command::Torsion;
    std::string curve;
    std::string t = "O";
    unsigned m = 1;
    std::string p = "O";
    std::string ext;
    std::string gens = "auto";
    OutputFormat output = OutputFormat::Text;
};

struct ResultEntry {
    std::string point;
    unsigned order = 0;  // 0: no finite order within the Mazur bound
    std::string b_raw;
    std::string b_normalized;
    std::string status;
    std::optional<std::string> witness;

    friend bool operator==(const ResultEntry&, const ResultEntry&) = default;
};

struct TorsionSection {
    std::string structure;
    std::vector<std::pair<std::string, unsigned>> generators;
    std::vector<std::string> elements;

    friend bool operator==(const TorsionSection&, const TorsionSection&) = default;
};

struct CocycleSection {
    unsigned m = 1;
    std::string t;

    friend bool operator==(const CocycleSection&, const CocycleSection&) = default;
};

/// Everything a job prints; the JSON form is a lossless encoding of this struct.
struct Report {
    std::string schema = "1";
    std::string command;
    std::array<std::string, 5> curve;
    std::string equation;
    std::optional<CocycleSection> cocycle;
    std::optional<std::string> extension;
    std::optional<TorsionSection> torsion;
    std::vector<ResultEntry> results;
    std::optional<std::vector<std::vector<std::string>>> cocycle_table;
    std::optional<std::vector<unsigned>> group_structure;
    std::optional<unsigned> order_bound;
    bool rank_zero_assumed = false;

    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// Performs the computation. Throws the library's errors on bad input.
Report build_report(const JobSpec& job);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

/// Exit codes: 0 success, 1 parse/validation error, 2 computational limit,
/// 3 internal invariant failure.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace relbr::cli
