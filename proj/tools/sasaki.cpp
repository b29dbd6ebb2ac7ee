#include "sasaki/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Sasakian nilmanifold models"};
    app.require_subcommand(1);
    sasaki::CommandOptions o;
    app.add_option("--threads", o.threads, "cap on worker threads")->check(CLI::PositiveNumber);

    std::string degrees;
    std::size_t rank = 0;
    auto model = [&](CLI::App* c, bool required = true) {
        auto* opt = c->add_option("--model", o.model, "model file");
        if (required) opt->required();
    };
    auto* validate = app.add_subcommand("validate", "Sasakian axioms, CE and metric sanity");
    model(validate);
    validate->add_option("--bundle", o.bundle, "bundle file");

    auto* cohom = app.add_subcommand("cohomology", "basic, full or twisted cohomology");
    model(cohom);
    cohom->add_flag("--basic", o.basic);
    cohom->add_flag("--full", o.full);
    cohom->add_option("--bundle", o.bundle);

    for (const char* name : {"kahler-check", "ddc-check", "formality-check"}) {
        auto* c = app.add_subcommand(name);
        model(c);
        c->add_option("--bundle", o.bundle);
    }
    app.get_subcommand("kahler-check")->description("Kähler identities and harmonic theory");
    app.get_subcommand("ddc-check")->description("DDᶜ-lemma degree by degree");
    app.get_subcommand("formality-check")->description("almost-formality zigzag");

    auto* quad = app.add_subcommand("quadraticity", "quadratic-cone certificate for the germ model");
    model(quad);
    quad->add_option("--bundle", o.bundle);
    quad->add_option("--rank", rank)->check(CLI::PositiveNumber);

    auto* cup = app.add_subcommand("cup-vanishing", "twisted cup products in the vanishing range");
    model(cup);
    cup->add_option("--bundle1", o.bundle1);
    cup->add_option("--bundle2", o.bundle2);
    cup->add_option("--degrees", degrees, "s,t")->required();

    auto* repvar = app.add_subcommand("repvar", "Fox calculus and order-2 relator ideal");
    repvar->add_option("--group", o.group)->required();
    repvar->add_option("--compare-model", o.compare_model);
    repvar->add_option("--rank", rank)->check(CLI::PositiveNumber);

    auto* emit = app.add_subcommand("emit-corpus", "write the bundled corpus");
    emit->add_option("--out", o.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    o.command = app.get_subcommands().front()->get_name();
    if (rank) o.rank = rank;
    if (!degrees.empty()) {
        int s = 0, t = 0;
        char comma = 0;
        std::istringstream in(degrees);
        if (!(in >> s >> comma >> t) || comma != ',' || !in.eof()) {
            std::cerr << "--degrees: expected s,t, got '" << degrees << "'\n";
            return 2;
        }
        o.degrees = {s, t};
    }
    const auto r = sasaki::run_command(o);
    if (r.exit_code == 2) {
        std::cerr << "error: " << r.error << "\n";
        return 2;
    }
    std::cout << r.report;
    return r.exit_code;
}
