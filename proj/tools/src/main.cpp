#include <iostream>

#include "CLI11.hpp"
#include "cetaev_cli/commands.hpp"

namespace {

void add_common(CLI::App* sub, cetaev::cli::RunConfig& cfg)
{
    sub->add_option("--out", cfg.out_dir, "Directory for report files (written atomically)");
    sub->add_flag("--json", cfg.json, "Print the JSON report to stdout");
    sub->add_flag("--no-timestamp", cfg.no_timestamp, "Omit generated_at so reports are byte-reproducible");
}

void add_analysis(CLI::App* sub, cetaev::cli::RunConfig& cfg)
{
    auto* corpus = sub->add_option("--corpus", cfg.corpus, "Built-in potential (see `cetaev catalog`)");
    auto* input = sub->add_option("--input", cfg.input, "Potential spec file")->check(CLI::ExistingFile);
    corpus->excludes(input);
    input->excludes(corpus);
    sub->add_option("--s", cfg.s, "Jet order s (>= 2)");
    sub->add_option("--eps", cfg.eps, "Starting radius of the epsilon schedule");
    sub->add_option("--samples", cfg.samples, "Sphere sample size (default 4096 in 2-D, 20000 above)");
    sub->add_option("--zero-tol", cfg.zero_tol, "Zero tolerance (scaled by r^degree)");
    sub->add_option("--margin", cfg.margin, "Margin eta for closure and boundary checks");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Jet-based instability analysis of Hamiltonian equilibria"};
    app.require_subcommand(1);
    cetaev::cli::RunConfig cfg;

    auto* analyze = app.add_subcommand("analyze", "Check hypotheses H1-H3, strict Cetaev and the W sandwich");
    add_analysis(analyze, cfg);
    add_common(analyze, cfg);

    auto* trajectory = app.add_subcommand("trajectory", "Construct an asymptotic trajectory (Krasovskii shooting)");
    add_analysis(trajectory, cfg);
    add_common(trajectory, cfg);
    trajectory->add_option("--seeds", cfg.seeds, "Last seed index K (seeds k = 2..K)");
    trajectory->add_flag("--force", cfg.force, "Run even when strict Cetaev is not certified");

    auto* verify = app.add_subcommand("verify-paper", "Exact checks of the worked example");
    add_common(verify, cfg);
    verify->add_option("--item", cfg.item, "Run a single item (a..g)");

    auto* cat = app.add_subcommand("catalog", "List the built-in potentials");
    add_common(cat, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help exits 0; every usage error maps to the operational-error status
        return app.exit(e) == 0 ? cetaev::cli::kOk : cetaev::cli::kError;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    return cetaev::cli::run(cfg, std::cout, std::cerr);
}
