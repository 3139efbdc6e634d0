#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "relbr/cli.hpp"

int main(int argc, char** argv)
{
    using relbr::cli::Command;
    using relbr::cli::OutputFormat;

    CLI::App app{"Relative Brauer groups of genus one curves given by rational cyclic cocycles"};
    app.require_subcommand(1);

    relbr::cli::JobSpec job;
    const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--curve", job.curve, "a1 a2 a3 a4 a6, or [A,B] for y^2 = x^3 + Ax + B")->required();
        sub->add_option("--output", job.output, "text or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_flag_callback("--json", [&] { job.output = OutputFormat::Json; }, "same as --output json");
    };
    auto add_cocycle = [&](CLI::App* sub) {
        sub->add_option("--t", job.t, "gamma(sigma): O, x,y or -x,y for a negation")->required();
        sub->add_option("--m", job.m, "order of the cyclic Galois group")->required()->check(CLI::PositiveNumber);
        sub->add_option("--ext", job.ext, "quad:d or cyclo:N:h1,h2,...")->required();
    };

    auto* torsion = app.add_subcommand("torsion", "torsion subgroup E(Q)_tors with generators");
    add_common(torsion);
    torsion->callback([&] { job.command = Command::Torsion; });

    auto* pairing = app.add_subcommand("pairing", "the class a_X(p) for one rational point p");
    add_common(pairing);
    add_cocycle(pairing);
    pairing->add_option("--p", job.p, "the point p")->required();
    pairing->callback([&] { job.command = Command::Pairing; });

    auto* relbr = app.add_subcommand("relbr", "presentation of Br(X/Q) from generators of E(Q)");
    add_common(relbr);
    add_cocycle(relbr);
    relbr->add_option("--gens", job.gens, "auto (torsion subgroup, rank 0 assumed) or x1,y1;x2,y2;...");
    relbr->callback([&] { job.command = Command::RelBr; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return relbr::cli::run(job, std::cout, std::cerr);
}
