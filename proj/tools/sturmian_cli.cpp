#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sturmian/run.hpp"

namespace {

void add_common(CLI::App* cmd, sturmian::RunConfig& cfg, std::string& format_name) {
    cmd->add_option("--cap", cfg.length_cap, "abort once a level exceeds this many letters")
        ->capture_default_str();
    cmd->add_option("--format", format_name, "output format: text, json or tsv")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Sturmian words and their maximal palindromes"};
    app.require_subcommand(1);

    sturmian::RunConfig cfg;
    std::string format_name = "text";

    CLI::App* generate = app.add_subcommand("generate", "expand a defining sequence");
    generate->add_option("--pi", cfg.pi_text, "defining sequence, e.g. 1,2;2,1")->required();
    generate->add_option("--seed", cfg.seed, "level-0 word")->capture_default_str();
    generate->add_option("--out", cfg.out_file, "also write the full word to this file");
    add_common(generate, cfg, format_name);

    CLI::App* analyze = app.add_subcommand(
        "analyze", "list palindrome occurrences, the distinct set and the counts");
    analyze->add_option("--pi", cfg.pi_text, "defining sequence")->required();
    analyze->add_option("--seed", cfg.seed, "level-0 word")->capture_default_str();
    add_common(analyze, cfg, format_name);

    CLI::App* verify = app.add_subcommand(
        "verify", "check the closed-form counts against brute-force enumeration");
    verify->add_option("--pi", cfg.pi_text, "also verify this specific sequence");
    verify->add_option("--margin", cfg.margin_levels, "extra context levels around the core")
        ->capture_default_str();
    verify->add_option("--rng-seed", cfg.rng_seed, "sweep generator seed")
        ->capture_default_str();
    verify->add_option("--sweep-count", cfg.sweep_count, "number of random sequences")
        ->capture_default_str();
    verify->add_option("--sweep-n", cfg.sweep_max_n, "max sequence length in the sweep")
        ->capture_default_str();
    verify->add_option("--sweep-p", cfg.sweep_max_p, "max morphism parameter in the sweep")
        ->capture_default_str();
    add_common(verify, cfg, format_name);

    CLI::App* bistandard = app.add_subcommand(
        "bistandard", "iterate the palindromic reflection from a single letter");
    bistandard->add_option("--pi", cfg.pi_text, "defining sequence, cycled")->required();
    bistandard->add_option("--iterations", cfg.iterations, "number of reflection steps")
        ->capture_default_str();
    add_common(bistandard, cfg, format_name);

    CLI::App* bench = app.add_subcommand(
        "bench", "time the occurrence scan on growing alternating-pair words");
    bench->add_option("--iterations", cfg.iterations, "number of word sizes")
        ->capture_default_str();
    add_common(bench, cfg, format_name);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        cfg.format = sturmian::parse_format(format_name);
    } catch (const sturmian::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sturmian::kExitInputError;
    }
    return sturmian::run(cfg, std::cout, std::cerr);
}
