#include "commands.hpp"

#include "quadevo/csv.hpp"
#include "quadevo/sexpr.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace quadevo::cli {

namespace {

/// trace.csv -> trace_run3.csv for replicated runs; untouched for runs == 1.
std::string run_path(const std::string& path, int run, int runs) {
    if (runs == 1) {
        return path;
    }
    const std::filesystem::path p(path);
    std::filesystem::path suffixed = p.parent_path();
    suffixed /= p.stem().string() + "_run" + std::to_string(run) + p.extension().string();
    return suffixed.string();
}

bool write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return false;
    }
    out << contents;
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing '" << path << "'\n";
        return false;
    }
    return true;
}

} // namespace

int cmd_solve(const SolveOptions& options) {
    try {
        options.ga.validate();
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    if (options.runs < 1) {
        std::cerr << "error: --runs must be at least 1\n";
        return 1;
    }

    const Quadratic equation(1.0, options.n, options.m);
    bool all_reached_tolerance = true;

    for (int run = 0; run < options.runs; ++run) {
        ga::GaConfig config = options.ga;
        config.rng_seed = options.ga.rng_seed + static_cast<std::uint64_t>(run);

        const ga::GaResult result = ga::run_ga(equation, config);
        all_reached_tolerance = all_reached_tolerance && result.history.terminated_exact;

        if (options.runs > 1) {
            std::printf("run %d: ", run);
        }
        std::printf("x = %s  |f(x)| = %s  generations = %d  %s\n",
                    csv::format_real(result.best_x).c_str(),
                    csv::format_real(result.best_fitness).c_str(),
                    result.history.generations_used,
                    result.history.terminated_exact ? "(tolerance reached)"
                                                    : "(tolerance not reached)");

        if (!options.out_path.empty()) {
            const std::string path = run_path(options.out_path, run, options.runs);
            if (!write_file(path, csv::ga_history_csv(result.history))) {
                return 1;
            }
        }
    }
    return all_reached_tolerance ? 0 : 2;
}

int cmd_coevolve(const CoevolveOptions& options) {
    try {
        options.config.validate();
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    if (options.runs < 1) {
        std::cerr << "error: --runs must be at least 1\n";
        return 1;
    }

    for (int run = 0; run < options.runs; ++run) {
        coevo::CoevoConfig config = options.config;
        config.rng_seed = options.config.rng_seed + static_cast<std::uint64_t>(run);

        const coevo::CoevoResult result = coevo::run_coevolution(config);
        const std::string best_line = sexpr::serialize(*result.best.tree);

        if (options.runs > 1) {
            std::printf("run %d: ", run);
        }
        std::printf("epochs = %zu  best_hp = %s  best = %s\n", result.stats.size(),
                    csv::format_real(result.best.hit_points).c_str(), best_line.c_str());

        if (!options.out_path.empty()) {
            const std::string path = run_path(options.out_path, run, options.runs);
            if (!write_file(path, csv::epoch_stats_csv(result.stats))) {
                return 1;
            }
        }
        if (!options.best_out_path.empty()) {
            const std::string path = run_path(options.best_out_path, run, options.runs);
            if (!write_file(path, best_line + "\n")) {
                return 1;
            }
        }
    }
    return 0;
}

namespace {

bool parse_binding(const std::string& text, char& letter, double& value) {
    if (text.size() < 3 || text[1] != '=') {
        return false;
    }
    if (!std::isalpha(static_cast<unsigned char>(text[0]))) {
        return false;
    }
    letter = text[0];
    const char* begin = text.c_str() + 2;
    char* end = nullptr;
    value = std::strtod(begin, &end);
    return end != begin && *end == '\0';
}

} // namespace

int cmd_eval_expr(const EvalExprOptions& options) {
    sexpr::Bindings env;
    for (const std::string& bind : options.binds) {
        char letter = 0;
        double value = 0.0;
        if (!parse_binding(bind, letter, value)) {
            std::cerr << "error: --bind expects LETTER=VALUE, got '" << bind << "'\n";
            return 1;
        }
        env.set(letter, value);
    }

    sexpr::ExprPtr tree;
    try {
        tree = sexpr::parse(options.expr);
    } catch (const sexpr::ParseError& error) {
        std::cerr << "parse error: " << error.what() << "\n";
        return 1;
    }

    double value = 0.0;
    try {
        value = sexpr::evaluate(*tree, env);
    } catch (const sexpr::EvalError& error) {
        std::cerr << "evaluation error: " << sexpr::to_string(error.kind()) << " at "
                  << sexpr::path_to_string(error.path()) << "\n";
        return 3;
    }
    std::printf("%.10g\n", value);
    return 0;
}

} // namespace quadevo::cli
