#pragma once

#include "quadevo/chromosome.hpp"
#include "quadevo/quadratic.hpp"
#include "quadevo/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace quadevo::ga {

enum class MutationMode { Flip, Interchange, Reverse };
enum class CrossoverSide { Left, Right };

struct GaConfig {
    int population_size = 50;
    int chromosome_length = 20;
    int fractional_bits = 14;
    int max_generations = 500;
    double fitness_tolerance = 1e-2;
    MutationMode mutation_mode = MutationMode::Flip;
    double mutation_probability = 0.01;
    std::uint64_t rng_seed = 0;

    /// Throws std::invalid_argument on any violated bound:
    /// population_size >= 2, 2 <= chromosome_length <= 64 (the magnitude must
    /// fit a 64-bit accumulator), 0 <= fractional_bits <= chromosome_length-2,
    /// max_generations >= 0, fitness_tolerance >= 0, mutation_probability in [0,1].
    void validate() const;
};

struct RunHistory {
    struct Entry {
        int generation;         ///< 0 is the initial population
        long long evaluations;  ///< cumulative fitness evaluations so far
        double best_fitness;    ///< best-so-far |f(x)|
        double best_x;          ///< decoded x of the best-so-far individual
    };
    std::vector<Entry> per_generation_best;
    bool terminated_exact = false;  ///< best fitness reached the tolerance
    int generations_used = 0;       ///< evolution cycles actually performed
};

struct GaResult {
    double best_x = 0.0;
    double best_fitness = 0.0;
    RunHistory history;
};

/// population_size chromosomes of chromosome_length uniform random bits.
std::vector<Chromosome> random_population(const GaConfig& config, Rng& rng);

/// One tournament: the contestant with smaller |f| wins; ties keep the first.
const Chromosome& tournament_winner(const Chromosome& first, const Chromosome& second,
                                    const Quadratic& q, int fractional_bits);

/// population_size winners of two-contestant tournaments; both contestants are
/// drawn uniformly with replacement and may coincide.
std::vector<Chromosome> tournament_select(const std::vector<Chromosome>& population,
                                          const Quadratic& q, const GaConfig& config,
                                          Rng& rng);

/// Cut-point crossover: side Left exchanges bits [0, cut_point), side Right
/// exchanges bits [cut_point, length). Requires equal lengths and
/// 1 <= cut_point <= length-1 (throws std::invalid_argument otherwise).
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            std::size_t cut_point, CrossoverSide side);

/// Flip: each bit inverted independently with probability p.
/// Interchange: with probability p, two distinct random positions swap.
/// Reverse: with probability p, the whole bit sequence is reversed.
Chromosome mutate(const Chromosome& c, MutationMode mode, double probability, Rng& rng);

/// Full generation loop (decode, evaluate, select, crossover, mutate) searching
/// for a root of q. The evolving population carries no elitism; the best
/// individual ever seen is tracked separately and returned. Deterministic in
/// config.rng_seed. One history row is recorded per evaluated generation,
/// including the initial population (generation 0).
GaResult run_ga(const Quadratic& q, const GaConfig& config);

} // namespace quadevo::ga
