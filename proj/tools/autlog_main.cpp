#include "autlog/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    CLI::App app{"partition and closure logics of normalized automata"};
    app.require_subcommand(1);

    autlog::cli::Config cfg;
    std::string format = "text";

    const auto add_common = [&cfg, &format](CLI::App* cmd) {
        cmd->add_option("graph", cfg.graph_path,
                        "graph file: vertex count, then one 'u v' edge per line")
            ->required();
        cmd->add_option("--format", format, "output format (default text)")
            ->check(CLI::IsMember({"text", "dot", "json"}));
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "full report: partitions, both logics, lattice checks");
    add_common(analyze);

    CLI::App* micro =
        app.add_subcommand("micro", "partition logic of single-automaton statements");
    add_common(micro);

    CLI::App* macro = app.add_subcommand("macro", "closure logic of ensemble statements");
    add_common(macro);

    CLI::App* compare =
        app.add_subcommand("compare", "micro-testable versus macro-testable families");
    add_common(compare);

    CLI::App* simulate =
        app.add_subcommand("simulate", "run an ensemble protocol and infer the macrostate");
    add_common(simulate);
    simulate->add_option("--support", cfg.support, "ensemble support, e.g. \"1,2,3\"")
        ->required();
    simulate->add_option("--samples", cfg.samples, "samples per protocol row (default 100)")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", cfg.seed, "random seed (default 0)");
    simulate->add_flag("--exhaustive", cfg.exhaustive,
                       "probe each support state once instead of sampling");

    CLI::App* run = app.add_subcommand("run", "feed one input word to a single automaton");
    add_common(run);
    run->add_option("--initial", cfg.initial, "initial state (0 is the final state)")
        ->required();
    run->add_option("--inputs", cfg.inputs, "input word, e.g. \"2 3 3\"")->required();

    CLI11_PARSE(app, argc, argv);

    cfg.format = format == "dot"    ? autlog::cli::Format::dot
                 : format == "json" ? autlog::cli::Format::json
                                    : autlog::cli::Format::text;

    if (analyze->parsed()) return autlog::cli::cmd_analyze(cfg, std::cout, std::cerr);
    if (micro->parsed()) return autlog::cli::cmd_micro(cfg, std::cout, std::cerr);
    if (macro->parsed()) return autlog::cli::cmd_macro(cfg, std::cout, std::cerr);
    if (compare->parsed()) return autlog::cli::cmd_compare(cfg, std::cout, std::cerr);
    if (simulate->parsed()) return autlog::cli::cmd_simulate(cfg, std::cout, std::cerr);
    if (run->parsed()) return autlog::cli::cmd_run(cfg, std::cout, std::cerr);
    return 2;
}
