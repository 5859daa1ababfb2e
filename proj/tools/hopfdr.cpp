#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "hopfdr/commands.hpp"

int main(int argc, char** argv) {
    using namespace hopfdr;
    CLI::App app{"Exact de Rham, Hopf cochain and van Est computations for finite-dimensional Hopf algebras"};
    app.require_subcommand(1);

    CommandOptions o;
    std::string field, ideal, wedge = "symmetric", format = "json", output;
    const std::map<std::string, WedgeRelations> wedges{{"symmetric", WedgeRelations::symmetric},
                                                       {"antisymmetrizer", WedgeRelations::antisymmetrizer}};

    auto common = [&](CLI::App* sub, bool calculus) {
        sub->add_option("source", o.source, "document path or builtin:NAME")->required();
        sub->add_option("--field", field, "Q or F<p>; overrides a builtin's default field");
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("-o,--output", output, "write the report to a file");
        if (!calculus) return;
        sub->add_option("--ideal", ideal, "zero, full or an ideal block of the document");
        sub->add_flag("--universal", o.universal, "use the universal differential calculus");
        sub->add_option("--max-degree", o.max_degree, "highest form degree reported")->capture_default_str();
        sub->add_option("--wedge", wedge, "relations of the exterior algebra")
            ->check(CLI::IsMember({"symmetric", "antisymmetrizer"}));
    };

    common(app.add_subcommand("validate", "check the Hopf axioms and any ideal blocks"), false);
    common(app.add_subcommand("cohomology", "de Rham and invariant-form cohomology"), true);
    common(app.add_subcommand("vanest", "the van Est spectral sequence"), true);
    common(app.add_subcommand("hopflie", "the Hopf-Lie algebra and its cohomology"), true);
    CLI::App* exp = app.add_subcommand("export", "write an algebra document");
    exp->add_option("source", o.source, "document path or builtin:NAME")->required();
    exp->add_option("--field", field, "Q or F<p>");
    exp->add_option("-o,--output", output, "write the document to a file");
    CLI::App* self = app.add_subcommand("selftest", "round trips and seeded spectral sequence checks");
    self->add_option("--seed", o.seed, "seed for the random double complexes")->capture_default_str();
    self->add_option("--samples", o.samples, "number of random double complexes")->capture_default_str();
    self->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    self->add_option("-o,--output", output, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!field.empty()) o.field = field;
    if (!ideal.empty()) o.ideal = ideal;
    o.wedge = wedges.at(wedge);
    ReportFormat fmt = format == "text" ? ReportFormat::text : ReportFormat::json;
    std::string name = app.get_subcommands().front()->get_name();

    if (output.empty()) return run_command(name, o, fmt, std::cout, std::cerr);
    std::ofstream out(output);
    if (!out) {
        std::cerr << "error: cannot write " << output << '\n';
        return 2;
    }
    return run_command(name, o, fmt, out, std::cerr);
}
