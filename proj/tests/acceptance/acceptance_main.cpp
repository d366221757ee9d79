// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Usage: quadevo_acceptance <path-to-quadevo-cli>
#include "quadevo/coevolution.hpp"
#include "quadevo/csv.hpp"
#include "quadevo/ga.hpp"
#include "quadevo/sexpr.hpp"

#include "../support/subprocess.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace quadevo;
using testsupport::read_file;
using testsupport::run_command;
using testsupport::TempDir;

namespace {

struct Criterion {
    bool passed = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double brute_force_best_fitness(const Quadratic& q, int length, int fractional_bits) {
    double best = std::numeric_limits<double>::infinity();
    ga::Chromosome c;
    c.bits.resize(length);
    for (std::uint64_t pattern = 0; pattern < (1ull << length); ++pattern) {
        for (int i = 0; i < length; ++i) {
            c.bits[i] = (pattern >> (length - 1 - i)) & 1u;
        }
        best = std::min(best, fitness(ga::decode(c, fractional_bits), q));
    }
    return best;
}

// --- 1. Integer-root exactness ---------------------------------------------

Criterion integer_root_exactness() {
    Rng instance_rng(20250808);
    int exact = 0;
    double slowest = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double r1 = static_cast<double>(instance_rng.index(31)) - 15.0;
        const double r2 = static_cast<double>(instance_rng.index(31)) - 15.0;
        const Quadratic q(1.0, -(r1 + r2), r1 * r2);
        if (brute_force_best_fitness(q, 8, 0) != 0.0) {
            return {false, "enumeration oracle failed to certify a zero optimum"};
        }

        ga::GaConfig config;
        config.population_size = 50;
        config.chromosome_length = 8;
        config.fractional_bits = 0;
        config.max_generations = 300;
        config.fitness_tolerance = 0.0;
        config.rng_seed = 1000 + static_cast<std::uint64_t>(i);

        const auto start = std::chrono::steady_clock::now();
        const ga::GaResult result = ga::run_ga(q, config);
        slowest = std::max(slowest, seconds_since(start));
        if (result.history.terminated_exact && result.best_fitness == 0.0) {
            ++exact;
        }
    }
    std::ostringstream detail;
    detail << exact << "/100 exact (need >=95), slowest run " << slowest << "s (need <1s)";
    return {exact >= 95 && slowest < 1.0, detail.str()};
}

// --- 2. The x^2+2x-7 experiment --------------------------------------------

Criterion experiment_equation_runs() {
    const Quadratic q(1.0, 2.0, -7.0);
    const double root_high = -1.0 + 2.0 * std::sqrt(2.0);
    const double root_low = -1.0 - 2.0 * std::sqrt(2.0);

    const auto start = std::chrono::steady_clock::now();
    int successes = 0;
    for (int i = 0; i < 100; ++i) {
        ga::GaConfig config;
        config.population_size = 200;
        config.chromosome_length = 20;
        config.fractional_bits = 14;
        config.max_generations = 500;
        config.fitness_tolerance = 1e-2;
        config.rng_seed = 2000 + static_cast<std::uint64_t>(i);

        const ga::GaResult result = ga::run_ga(q, config);
        const double nearest = std::abs(result.best_x - root_high) <
                                       std::abs(result.best_x - root_low)
                                   ? root_high
                                   : root_low;
        if (result.best_fitness <= 1e-2 && std::abs(result.best_x - nearest) <= 5e-2) {
            ++successes;
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << successes << "/100 within tolerance (need >=90), suite " << elapsed
           << "s (need <30s)";
    return {successes >= 90 && elapsed < 30.0, detail.str()};
}

// --- 3. GA operator invariants ----------------------------------------------

Criterion ga_operator_invariants() {
    Rng rng(333);
    auto random_chromosome = [&rng](std::size_t length) {
        ga::Chromosome c;
        c.bits.resize(length);
        for (auto& bit : c.bits) {
            bit = rng.coin() ? 1 : 0;
        }
        return c;
    };

    int conservation = 0;
    int identity = 0;
    int involution = 0;
    int tournament = 0;
    int range = 0;

    for (int i = 0; i < 10000; ++i) {
        const std::size_t length = 2 + rng.index(30);
        const ga::Chromosome a = random_chromosome(length);
        const ga::Chromosome b = random_chromosome(length);

        // crossover bit conservation per position
        const std::size_t cut = 1 + rng.index(length - 1);
        const auto side = rng.coin() ? ga::CrossoverSide::Right : ga::CrossoverSide::Left;
        const auto [c1, c2] = ga::crossover(a, b, cut, side);
        for (std::size_t pos = 0; pos < length; ++pos) {
            const std::multiset<int> parents{a.bits[pos], b.bits[pos]};
            if (parents != std::multiset<int>{c1.bits[pos], c2.bits[pos]}) {
                ++conservation;
                break;
            }
        }

        // mutate(p=0) identity, all modes
        const auto mode = static_cast<ga::MutationMode>(rng.index(3));
        if (!(ga::mutate(a, mode, 0.0, rng) == a)) {
            ++identity;
        }

        // flip(p=1) involution
        const auto flipped =
            ga::mutate(ga::mutate(a, ga::MutationMode::Flip, 1.0, rng), ga::MutationMode::Flip,
                       1.0, rng);
        if (!(flipped == a)) {
            ++involution;
        }

        // tournament minimum selection with first-drawn ties
        const Quadratic q(1.0, rng.uniform({-5.0, 5.0}), rng.uniform({-30.0, 30.0}));
        const int frac = static_cast<int>(rng.index(length - 1));
        const double fa = fitness(ga::decode(a, frac), q);
        const double fb = fitness(ga::decode(b, frac), q);
        const ga::Chromosome& winner = ga::tournament_winner(a, b, q, frac);
        const ga::Chromosome& expected = fb < fa ? b : a;
        if (&winner != &expected) {
            ++tournament;
        }

        // decode range bound
        const double bound = (std::pow(2.0, static_cast<double>(length - 1)) - 1.0) /
                             std::pow(2.0, frac);
        if (std::abs(ga::decode(a, frac)) > bound) {
            ++range;
        }
    }

    std::ostringstream detail;
    detail << "violations over 10000 cases: conservation=" << conservation
           << " p0-identity=" << identity << " flip-involution=" << involution
           << " tournament=" << tournament << " range=" << range;
    return {conservation + identity + involution + tournament + range == 0, detail.str()};
}

// --- 4. Parser round trip -----------------------------------------------------

bool structurally_equal(const sexpr::Expr& a, const sexpr::Expr& b) {
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
    case sexpr::Expr::Kind::Identifier: return a.name == b.name;
    case sexpr::Expr::Kind::Constant: return a.value == b.value;
    case sexpr::Expr::Kind::Binary:
        return a.bin_op == b.bin_op && structurally_equal(*a.left, *b.left) &&
               structurally_equal(*a.right, *b.right);
    case sexpr::Expr::Kind::Unary:
        return a.un_op == b.un_op && structurally_equal(*a.left, *b.left);
    }
    return false;
}

Criterion parser_round_trip() {
    Rng rng(444);
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const int depth = 1 + static_cast<int>(rng.index(8));
        const sexpr::ExprPtr tree = sexpr::random_tree(depth, "ABCxyz", {-50.0, 50.0}, rng);
        const sexpr::ExprPtr reparsed = sexpr::parse(sexpr::serialize(*tree));
        if (!structurally_equal(*tree, *reparsed)) {
            ++failures;
        }
    }

    bool literal_ok = false;
    std::string printed;
    try {
        const sexpr::ExprPtr literal = sexpr::parse("(÷ (+ 0.089 0.563) X)");
        printed = csv::format_real(sexpr::evaluate(*literal->left, {}));
        literal_ok = printed == "0.652";
    } catch (const std::exception&) {
        literal_ok = false;
    }

    std::ostringstream detail;
    detail << failures << "/10000 round-trip failures, literal example sum prints '" << printed
           << "'";
    return {failures == 0 && literal_ok, detail.str()};
}

// --- 5. Quadratic-formula oracle tree ----------------------------------------

Criterion formula_tree_oracle() {
    const sexpr::ExprPtr plus = sexpr::quadratic_formula_tree(sexpr::RootSign::Plus);
    const sexpr::ExprPtr minus = sexpr::quadratic_formula_tree(sexpr::RootSign::Minus);

    Rng rng(555);
    int mismatches = 0;
    int errors = 0;
    for (int i = 0; i < 10000; ++i) {
        const coevo::QuadraticPrey prey = coevo::gen_prey({-10.0, 10.0}, rng);
        sexpr::Bindings env;
        env.set('A', prey.a);
        env.set('B', prey.b);
        env.set('C', prey.c);

        const double expected_high = std::max(prey.root1, prey.root2);
        const double expected_low = std::min(prey.root1, prey.root2);
        try {
            const double high = sexpr::evaluate(*plus, env);
            const double low = sexpr::evaluate(*minus, env);
            if (std::abs(high - expected_high) > 1e-9 * std::max(1.0, std::abs(expected_high)) ||
                std::abs(low - expected_low) > 1e-9 * std::max(1.0, std::abs(expected_low))) {
                ++mismatches;
            }
        } catch (const sexpr::EvalError&) {
            ++errors;
        }
    }

    coevo::CoevoConfig config; // default tolerance 1e-3
    Rng trials_rng(556);
    const double rate = coevo::success_rate(
        coevo::Predator{plus->clone(), config.initial_hp, true}, 10000, config, trials_rng);

    std::ostringstream detail;
    detail << mismatches << " mismatches, " << errors << " evaluation errors over 10000 prey,"
           << " success_rate=" << rate;
    return {mismatches == 0 && errors == 0 && rate == 1.0, detail.str()};
}

// --- 6. Coevolution bookkeeping ----------------------------------------------

class BookkeepingObserver : public coevo::CoevoObserver {
public:
    BookkeepingObserver(int prey_count, int max_depth)
        : prey_count_(prey_count), max_depth_(max_depth) {}

    void on_epoch_start(int, const std::vector<coevo::QuadraticPrey>& pool) override {
        if (static_cast<int>(pool.size()) != prey_count_) {
            ++violations;
        }
        for (const auto& prey : pool) {
            if (prey.solved) {
                ++violations; // fresh pools start fully unsolved
            }
        }
    }

    void on_evaluation(const coevo::Predator& p, double hp_before,
                       const std::vector<coevo::QuadraticPrey>& pool) override {
        if (p.hit_points > hp_before) {
            ++violations;
        }
        int solved = 0;
        for (const auto& prey : pool) {
            solved += prey.solved ? 1 : 0;
        }
        const int unsolved = static_cast<int>(pool.size()) - solved;
        if (solved + unsolved != prey_count_) {
            ++violations;
        }
    }

    void on_parents(const coevo::Predator& primary, const coevo::Predator& secondary) override {
        ++parent_events;
        if (!primary.alive || !secondary.alive) {
            ++violations;
        }
    }

    void on_child(const coevo::Predator& child) override {
        if (!child.alive || sexpr::tree_depth(*child.tree) > max_depth_) {
            ++violations;
        }
        try {
            const std::string text = sexpr::serialize(*child.tree);
            if (sexpr::serialize(*sexpr::parse(text)) != text) {
                ++violations;
            }
        } catch (const std::exception&) {
            ++violations;
        }
    }

    long violations = 0;
    long parent_events = 0;

private:
    int prey_count_;
    int max_depth_;
};

Criterion coevolution_bookkeeping() {
    // Default parameters: harsh penalties, frequent extinction.
    coevo::CoevoConfig defaults;
    defaults.max_epochs = 100;
    defaults.rng_seed = 11;
    BookkeepingObserver default_watch(defaults.prey_count, defaults.max_tree_depth);
    coevo::run_coevolution(defaults, &default_watch);

    // Mild penalties: survivors every epoch, recombination exercised heavily.
    coevo::CoevoConfig mild;
    mild.predator_count = 100;
    mild.prey_count = 30;
    mild.evaluations_per_epoch = 10;
    mild.penalty_deduction = 2.0;
    mild.max_epochs = 100;
    mild.rng_seed = 12;
    BookkeepingObserver mild_watch(mild.prey_count, mild.max_tree_depth);
    coevo::run_coevolution(mild, &mild_watch);

    std::ostringstream detail;
    detail << "violations: defaults=" << default_watch.violations
           << " survivor-rich=" << mild_watch.violations << " (recombination events "
           << mild_watch.parent_events << ")";
    return {default_watch.violations == 0 && mild_watch.violations == 0 &&
                mild_watch.parent_events > 0,
            detail.str()};
}

// --- 7. Oracle dominance -------------------------------------------------------

double epoch_remaining_hp(const sexpr::Expr& tree, const coevo::CoevoConfig& config,
                          std::uint64_t seed) {
    Rng rng(seed);
    std::vector<coevo::QuadraticPrey> pool;
    for (int i = 0; i < config.prey_count; ++i) {
        pool.push_back(coevo::gen_prey(config.root_range, rng));
    }
    coevo::Predator predator{tree.clone(), config.initial_hp, true};
    coevo::evaluate_predator(predator, pool, config, rng);
    return predator.hit_points;
}

Criterion oracle_dominance(const std::string& cli) {
    TempDir dir("quadevo_acceptance_oracle");
    const auto best_out = dir.file("best.txt");
    const auto result = run_command(cli + " coevolve --seed 7 --epochs 100 --inject-oracle"
                                          " --best-out " +
                                    best_out.string());
    if (result.exit_code != 0) {
        return {false, "coevolve --inject-oracle exited with " +
                           std::to_string(result.exit_code)};
    }
    const std::string best_line = read_file(best_out);
    if (best_line.empty()) {
        return {false, "no best predator written"};
    }

    sexpr::ExprPtr best_tree;
    try {
        best_tree = sexpr::parse(best_line);
    } catch (const sexpr::ParseError& error) {
        return {false, std::string("best predator does not parse: ") + error.what()};
    }

    coevo::CoevoConfig config;
    Rng rate_rng(777);
    const double rate = coevo::success_rate(
        coevo::Predator{best_tree->clone(), config.initial_hp, true}, 10000, config, rate_rng);

    // Per-epoch hit-point comparison under identical seeds.
    const sexpr::ExprPtr oracle = sexpr::quadratic_formula_tree(sexpr::RootSign::Plus);
    std::vector<sexpr::ExprPtr> rivals;
    rivals.push_back(sexpr::Expr::constant(0.0));
    rivals.push_back(sexpr::Expr::constant(1.0));
    rivals.push_back(sexpr::Expr::constant(-3.5));
    rivals.push_back(sexpr::Expr::identifier('A'));
    rivals.push_back(sexpr::Expr::identifier('B'));
    rivals.push_back(sexpr::Expr::identifier('C'));

    int dominated_epochs = 0;
    const int epochs = 10;
    for (int epoch = 0; epoch < epochs; ++epoch) {
        const std::uint64_t seed = 9000 + static_cast<std::uint64_t>(epoch);
        const double oracle_hp = epoch_remaining_hp(*oracle, config, seed);
        bool strictly_higher = true;
        for (const auto& rival : rivals) {
            if (epoch_remaining_hp(*rival, config, seed) >= oracle_hp) {
                strictly_higher = false;
            }
        }
        dominated_epochs += strictly_higher ? 1 : 0;
    }

    std::ostringstream detail;
    detail << "best success_rate=" << rate << ", oracle strictly ahead in " << dominated_epochs
           << "/" << epochs << " epochs";
    return {rate == 1.0 && dominated_epochs == epochs, detail.str()};
}

// --- 8. End-to-end determinism --------------------------------------------------

Criterion end_to_end_determinism(const std::string& cli) {
    TempDir dir("quadevo_acceptance_det");

    const auto solve_a = dir.file("solve_a.csv");
    const auto solve_b = dir.file("solve_b.csv");
    const std::string solve_flags = " solve --n 2 --m -7 --seed 42 --out ";
    const int solve_status_a = run_command(cli + solve_flags + solve_a.string()).exit_code;
    const int solve_status_b = run_command(cli + solve_flags + solve_b.string()).exit_code;

    const auto coevo_a = dir.file("coevo_a.csv");
    const auto coevo_b = dir.file("coevo_b.csv");
    const auto best_a = dir.file("best_a.txt");
    const auto best_b = dir.file("best_b.txt");
    const std::string coevo_flags = " coevolve --seed 9 --epochs 50";
    const int coevo_status_a =
        run_command(cli + coevo_flags + " --out " + coevo_a.string() + " --best-out " +
                    best_a.string())
            .exit_code;
    const int coevo_status_b =
        run_command(cli + coevo_flags + " --out " + coevo_b.string() + " --best-out " +
                    best_b.string())
            .exit_code;

    const bool solve_same = !read_file(solve_a).empty() && read_file(solve_a) == read_file(solve_b);
    const bool coevo_same = !read_file(coevo_a).empty() && read_file(coevo_a) == read_file(coevo_b);
    const bool best_same = read_file(best_a) == read_file(best_b);

    std::ostringstream detail;
    detail << "solve CSV identical=" << (solve_same ? "yes" : "no")
           << " coevolve CSV identical=" << (coevo_same ? "yes" : "no")
           << " best-out identical=" << (best_same ? "yes" : "no") << " (exit codes "
           << solve_status_a << "/" << solve_status_b << ", " << coevo_status_a << "/"
           << coevo_status_b << ")";
    return {solve_same && coevo_same && best_same && solve_status_a == solve_status_b &&
                coevo_status_a == coevo_status_b,
            detail.str()};
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: quadevo_acceptance <path-to-quadevo-cli>\n");
        return 2;
    }
    const std::string cli = argv[1];

    const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
        {"integer-root exactness", integer_root_exactness},
        {"x^2+2x-7 experiment", experiment_equation_runs},
        {"GA operator invariants", ga_operator_invariants},
        {"parser round trip", parser_round_trip},
        {"quadratic-formula oracle tree", formula_tree_oracle},
        {"coevolution bookkeeping", coevolution_bookkeeping},
        {"oracle dominance", [&cli] { return oracle_dominance(cli); }},
        {"end-to-end determinism", [&cli] { return end_to_end_determinism(cli); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& error) {
            outcome = {false, std::string("exception: ") + error.what()};
        }
        std::printf("[%s] criterion %zu: %s — %s\n", outcome.passed ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str());
        failures += outcome.passed ? 0 : 1;
    }
    return failures;
}
