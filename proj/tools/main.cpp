#include "commands.hpp"

#include <CLI11.hpp>

#include <map>
#include <string>

int main(int argc, char** argv) {
    using namespace quadevo;

    CLI::App app{"quadevo: evolutionary root solvers for quadratic equations"};
    app.require_subcommand(1);

    // --- solve: binary-chromosome GA on x^2 + n·x + m -----------------------
    cli::SolveOptions solve_options;
    CLI::App* solve = app.add_subcommand("solve", "Search for a real root of x^2 + n*x + m "
                                                  "with the binary genetic algorithm");
    solve->add_option("--n", solve_options.n, "Linear coefficient n")->required();
    solve->add_option("--m", solve_options.m, "Constant term m")->required();
    solve->add_option("--pop", solve_options.ga.population_size, "Population size")
        ->capture_default_str();
    solve->add_option("--chrom-len", solve_options.ga.chromosome_length,
                      "Chromosome length in bits (sign bit included)")
        ->capture_default_str();
    solve->add_option("--frac-bits", solve_options.ga.fractional_bits,
                      "Fractional bits of the fixed-point decoding")
        ->capture_default_str();
    solve->add_option("--generations", solve_options.ga.max_generations,
                      "Maximum number of generations")
        ->capture_default_str();
    solve->add_option("--tolerance", solve_options.ga.fitness_tolerance,
                      "Stop once best |f(x)| falls to this value")
        ->capture_default_str();
    const std::map<std::string, ga::MutationMode> mutation_names{
        {"flip", ga::MutationMode::Flip},
        {"interchange", ga::MutationMode::Interchange},
        {"reverse", ga::MutationMode::Reverse}};
    solve->add_option("--mutation", solve_options.ga.mutation_mode, "Mutation mode")
        ->transform(CLI::CheckedTransformer(mutation_names, CLI::ignore_case))
        ->default_str("flip");
    solve->add_option("--mut-prob", solve_options.ga.mutation_probability,
                      "Mutation probability")
        ->capture_default_str();
    solve->add_option("--seed", solve_options.ga.rng_seed, "Random seed")
        ->capture_default_str();
    solve->add_option("--out", solve_options.out_path,
                      "Write the generation,evaluations,best_fitness,best_x CSV trace here");
    solve->add_option("--runs", solve_options.runs,
                      "Replicated runs with seeds seed, seed+1, ... (output files suffixed)")
        ->capture_default_str();

    // --- coevolve: predator-prey GP over formula trees ----------------------
    cli::CoevolveOptions coevolve_options;
    CLI::App* coevolve = app.add_subcommand(
        "coevolve", "Evolve S-expression root formulas against random quadratic prey");
    coevolve->add_option("--predators", coevolve_options.config.predator_count,
                         "Predator population size")
        ->capture_default_str();
    coevolve->add_option("--prey", coevolve_options.config.prey_count,
                         "Prey generated per epoch")
        ->capture_default_str();
    coevolve->add_option("--hp", coevolve_options.config.initial_hp, "Initial hit-points")
        ->capture_default_str();
    coevolve->add_option("--reward", coevolve_options.config.reward_deduction,
                         "Hit-points deducted on an accurate root")
        ->capture_default_str();
    coevolve->add_option("--penalty", coevolve_options.config.penalty_deduction,
                         "Hit-points deducted on a miss")
        ->capture_default_str();
    coevolve->add_option("--tau", coevolve_options.config.accuracy_tolerance,
                         "Root match tolerance")
        ->capture_default_str();
    coevolve->add_option("--evals", coevolve_options.config.evaluations_per_epoch,
                         "Evaluations per predator per epoch")
        ->capture_default_str();
    coevolve->add_option("--root-min", coevolve_options.config.root_range.lo,
                         "Prey root range lower bound")
        ->capture_default_str();
    coevolve->add_option("--root-max", coevolve_options.config.root_range.hi,
                         "Prey root range upper bound")
        ->capture_default_str();
    coevolve->add_option("--depth", coevolve_options.config.max_tree_depth,
                         "Maximum formula tree depth")
        ->capture_default_str();
    coevolve->add_option("--epochs", coevolve_options.config.max_epochs,
                         "Number of epochs (0: evaluate the initial population once, "
                         "record no stats rows)")
        ->capture_default_str();
    coevolve->add_option("--seed", coevolve_options.config.rng_seed, "Random seed")
        ->capture_default_str();
    coevolve->add_flag("--inject-oracle", coevolve_options.config.inject_oracle,
                       "Debug: seed predator 0 with the closed-form root formula");
    coevolve->add_option("--out", coevolve_options.out_path,
                         "Write the epoch,alive_count,solved_count,best_hp CSV here");
    coevolve->add_option("--best-out", coevolve_options.best_out_path,
                         "Write the best predator's S-expression here (one line)");
    coevolve->add_option("--runs", coevolve_options.runs,
                         "Replicated runs with seeds seed, seed+1, ... (output files suffixed)")
        ->capture_default_str();

    // --- eval-expr: one-shot parser/evaluator --------------------------------
    cli::EvalExprOptions eval_options;
    CLI::App* eval_expr =
        app.add_subcommand("eval-expr", "Parse and evaluate one S-expression");
    eval_expr->add_option("expr", eval_options.expr, "Expression, e.g. \"(+ 0.089 0.563)\"")
        ->required();
    eval_expr->add_option("--bind", eval_options.binds,
                          "Identifier binding LETTER=VALUE (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 1;
    }

    if (solve->parsed()) {
        return cli::cmd_solve(solve_options);
    }
    if (coevolve->parsed()) {
        return cli::cmd_coevolve(coevolve_options);
    }
    return cli::cmd_eval_expr(eval_options);
}
