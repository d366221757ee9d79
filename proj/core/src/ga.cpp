#include "quadevo/ga.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace quadevo::ga {

void GaConfig::validate() const {
    if (population_size < 2) {
        throw std::invalid_argument("GaConfig: population_size must be at least 2");
    }
    if (chromosome_length < 2 || chromosome_length > 64) {
        throw std::invalid_argument("GaConfig: chromosome_length must be in [2, 64]");
    }
    if (fractional_bits < 0 || fractional_bits > chromosome_length - 2) {
        throw std::invalid_argument("GaConfig: fractional_bits must be in [0, chromosome_length-2]");
    }
    if (max_generations < 0) {
        throw std::invalid_argument("GaConfig: max_generations must be non-negative");
    }
    if (fitness_tolerance < 0.0) {
        throw std::invalid_argument("GaConfig: fitness_tolerance must be non-negative");
    }
    if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0)) {
        throw std::invalid_argument("GaConfig: mutation_probability must be in [0, 1]");
    }
}

std::vector<Chromosome> random_population(const GaConfig& config, Rng& rng) {
    std::vector<Chromosome> population(config.population_size);
    for (auto& chromosome : population) {
        chromosome.bits.resize(config.chromosome_length);
        for (auto& bit : chromosome.bits) {
            bit = rng.coin() ? 1 : 0;
        }
    }
    return population;
}

const Chromosome& tournament_winner(const Chromosome& first, const Chromosome& second,
                                    const Quadratic& q, int fractional_bits) {
    const double f_first = fitness(decode(first, fractional_bits), q);
    const double f_second = fitness(decode(second, fractional_bits), q);
    return f_second < f_first ? second : first;
}

std::vector<Chromosome> tournament_select(const std::vector<Chromosome>& population,
                                          const Quadratic& q, const GaConfig& config,
                                          Rng& rng) {
    assert(!population.empty());
    std::vector<Chromosome> selected;
    selected.reserve(config.population_size);
    for (int k = 0; k < config.population_size; ++k) {
        const Chromosome& first = population[rng.index(population.size())];
        const Chromosome& second = population[rng.index(population.size())];
        selected.push_back(tournament_winner(first, second, q, config.fractional_bits));
    }
    return selected;
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            std::size_t cut_point, CrossoverSide side) {
    if (a.length() != b.length()) {
        throw std::invalid_argument("crossover: chromosome lengths differ");
    }
    if (cut_point < 1 || cut_point > a.length() - 1) {
        throw std::invalid_argument("crossover: cut_point out of range");
    }
    Chromosome child_a = a;
    Chromosome child_b = b;
    const std::size_t begin = side == CrossoverSide::Left ? 0 : cut_point;
    const std::size_t end = side == CrossoverSide::Left ? cut_point : a.length();
    for (std::size_t i = begin; i < end; ++i) {
        std::swap(child_a.bits[i], child_b.bits[i]);
    }
    return {std::move(child_a), std::move(child_b)};
}

Chromosome mutate(const Chromosome& c, MutationMode mode, double probability, Rng& rng) {
    assert(probability >= 0.0 && probability <= 1.0);
    Chromosome out = c;
    switch (mode) {
    case MutationMode::Flip:
        for (auto& bit : out.bits) {
            if (rng.bernoulli(probability)) {
                bit ^= 1u;
            }
        }
        break;
    case MutationMode::Interchange:
        if (rng.bernoulli(probability) && out.bits.size() >= 2) {
            const std::size_t i = rng.index(out.bits.size());
            std::size_t j = rng.index(out.bits.size() - 1);
            if (j >= i) {
                ++j;
            }
            std::swap(out.bits[i], out.bits[j]);
        }
        break;
    case MutationMode::Reverse:
        if (rng.bernoulli(probability)) {
            std::reverse(out.bits.begin(), out.bits.end());
        }
        break;
    }
    return out;
}

namespace {

// Random-pair cut-point crossover producing exactly population_size children;
// the second child of the last pair is discarded when the count is odd.
std::vector<Chromosome> breed(const std::vector<Chromosome>& parents, const GaConfig& config,
                              Rng& rng) {
    const auto target = static_cast<std::size_t>(config.population_size);
    const std::size_t length = parents.front().length();
    std::vector<Chromosome> children;
    children.reserve(target);
    while (children.size() < target) {
        const std::size_t i = rng.index(parents.size());
        std::size_t j = rng.index(parents.size());
        while (j == i) {
            j = rng.index(parents.size());
        }
        const std::size_t cut = 1 + rng.index(length - 1);
        const CrossoverSide side = rng.coin() ? CrossoverSide::Right : CrossoverSide::Left;
        auto [first, second] = crossover(parents[i], parents[j], cut, side);
        children.push_back(std::move(first));
        if (children.size() < target) {
            children.push_back(std::move(second));
        }
    }
    for (auto& child : children) {
        child = mutate(child, config.mutation_mode, config.mutation_probability, rng);
    }
    return children;
}

} // namespace

GaResult run_ga(const Quadratic& q, const GaConfig& config) {
    config.validate();

    Rng rng(config.rng_seed);
    auto population = random_population(config, rng);

    GaResult result;
    result.best_fitness = std::numeric_limits<double>::infinity();
    long long evaluations = 0;

    for (int generation = 0;; ++generation) {
        for (const auto& chromosome : population) {
            const double x = decode(chromosome, config.fractional_bits);
            const double f = fitness(x, q);
            ++evaluations;
            if (f < result.best_fitness) {
                result.best_fitness = f;
                result.best_x = x;
            }
        }
        result.history.per_generation_best.push_back(
            {generation, evaluations, result.best_fitness, result.best_x});

        if (result.best_fitness <= config.fitness_tolerance) {
            result.history.terminated_exact = true;
            break;
        }
        if (generation == config.max_generations) {
            break;
        }

        auto selected = tournament_select(population, q, config, rng);
        population = breed(selected, config, rng);
    }

    result.history.generations_used =
        static_cast<int>(result.history.per_generation_best.size()) - 1;
    return result;
}

} // namespace quadevo::ga
