#include <benchmark/benchmark.h>

#include "quadevo/coevolution.hpp"
#include "quadevo/ga.hpp"
#include "quadevo/sexpr.hpp"

using namespace quadevo;

static void BM_Decode(benchmark::State& state) {
    Rng rng(7);
    ga::GaConfig config;
    config.population_size = 64;
    auto population = ga::random_population(config, rng);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ga::decode(population[i++ % population.size()], 14));
    }
}
BENCHMARK(BM_Decode);

static void BM_GaGeneration(benchmark::State& state) {
    const Quadratic equation(1.0, 2.0, -7.0);
    ga::GaConfig config;
    config.population_size = static_cast<int>(state.range(0));
    config.max_generations = 1;
    config.fitness_tolerance = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ga::run_ga(equation, config));
    }
}
BENCHMARK(BM_GaGeneration)->Arg(50)->Arg(200);

static void BM_ParseFormula(benchmark::State& state) {
    const std::string text =
        sexpr::serialize(*sexpr::quadratic_formula_tree(sexpr::RootSign::Plus));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sexpr::parse(text));
    }
}
BENCHMARK(BM_ParseFormula);

static void BM_EvalFormula(benchmark::State& state) {
    const auto tree = sexpr::quadratic_formula_tree(sexpr::RootSign::Plus);
    sexpr::Bindings env;
    env.set('A', 1.0);
    env.set('B', 2.0);
    env.set('C', -7.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sexpr::evaluate(*tree, env));
    }
}
BENCHMARK(BM_EvalFormula);

static void BM_RandomTree(benchmark::State& state) {
    Rng rng(42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sexpr::random_tree(8, "ABC", {-10.0, 10.0}, rng));
    }
}
BENCHMARK(BM_RandomTree);

static void BM_CoevolutionEpoch(benchmark::State& state) {
    coevo::CoevoConfig config;
    config.predator_count = static_cast<int>(state.range(0));
    config.prey_count = 20;
    config.max_epochs = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coevo::run_coevolution(config));
    }
}
BENCHMARK(BM_CoevolutionEpoch)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
