#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "cantor/cli.hpp"

int main(int argc, char** argv) {
    cantor::cli::RunConfig config;
    CLI::App app{"Exact (p,q) Cantor sets, Cantor functions and their ultrametric structure"};
    app.require_subcommand(1);

    const std::pair<const char*, const char*> verbs[] = {
        {"set", "level-n intervals or gaps (CSV/JSON)"},
        {"phi", "Cantor function staircase (CSV/JSON/SVG)"},
        {"dim", "similarity dimension ln p / ln r"},
        {"measure", "valued, Lebesgue and Hausdorff-cover measures of a cylinder union"},
        {"valuation", "scale-relative valuation and its lattice quantization"},
        {"verify", "run the identity and property suites; exit 1 on any failure"},
        {"diagnose", "per-level one-sided log-derivative surrogates at a point"},
    };
    for (const auto& [verb, help] : verbs) {
        auto* sub = app.add_subcommand(verb, help);
        sub->callback([&config, verb] { config.verb = verb; });

        auto* spec_file = sub->add_option("--spec", config.spec_file, "JSON spec file {\"r\":N,\"kept_digits\":[...]}");
        auto* r = sub->add_option("--r", config.r, "base r");
        auto* digits = sub->add_option("--digits", config.digits, "kept digits, comma separated")->delimiter(',');
        spec_file->excludes(r)->excludes(digits);
        r->needs(digits);
        digits->needs(r);

        sub->add_option("--level", config.level, "construction / quantization level");
        sub->add_option("--samples", config.samples, "sample or trial count");
        sub->add_option("--depth", config.depth, "refinement depth / k_max");
        sub->add_option("--exponent", config.exponent, "extra cover exponent");
        sub->add_option("--seed", config.seed, "random seed");
        sub->add_option("--out", config.out, "output path (default stdout)");
        sub->add_option("--format", config.format, "csv | json | svg")->check(CLI::IsMember({"csv", "json", "svg"}));
        sub->add_option("--gaps", config.gaps, "set: none | raw | merged");
        sub->add_option("--x", config.x, "point as a/b (diagnose)");
        sub->add_option("--x-tilde", config.x_tilde, "infinitesimal (valuation)");
        sub->add_option("--epsilon", config.epsilon, "scale (valuation)");
        sub->add_option("--anchor", config.anchor, "anchor x for the inversion rule (valuation)");
        sub->add_option("--lambda", config.lambda, "inversion constant in (0,1] (valuation)");
        sub->add_option("--cylinders", config.cylinders, "measure: prefixes like '0,2;2'");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cantor::cli::kUsageError;
    }
    return cantor::cli::run(config, std::cout, std::cerr);
}
