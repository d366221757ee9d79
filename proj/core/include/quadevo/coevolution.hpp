#pragma once

#include "quadevo/rng.hpp"
#include "quadevo/sexpr.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace quadevo::coevo {

/// A quadratic x² + Bx + C built from two known roots; the prey record.
struct QuadraticPrey {
    double root1 = 0.0;
    double root2 = 0.0;
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    bool solved = false;
};

/// A candidate root formula with its remaining fitness budget.
struct Predator {
    sexpr::ExprPtr tree;
    double hit_points = 0.0;
    bool alive = true;
};

struct CoevoConfig {
    int predator_count = 200;
    int prey_count = 50;
    double initial_hp = 100.0;
    double reward_deduction = 1.0;    ///< taken on an accurate root (small)
    double penalty_deduction = 10.0;  ///< taken on a miss (large)
    double accuracy_tolerance = 1e-3; ///< root-match threshold
    int evaluations_per_epoch = 20;
    Interval root_range{-10.0, 10.0}; ///< prey root sampling range
    int max_epochs = 100;
    int max_tree_depth = 8;
    std::uint64_t rng_seed = 0;
    bool inject_oracle = false;       ///< debug: predator 0 starts as the formula tree

    /// Throws std::invalid_argument on violated bounds (counts >= 1,
    /// deductions > 0, reward < penalty, tolerance > 0, non-degenerate
    /// root_range, max_epochs >= 0, max_tree_depth >= 1).
    void validate() const;
};

struct EpochStats {
    int epoch = 0;        ///< 1-based
    int alive_count = 0;  ///< predators alive after the epoch's evaluations
    int solved_count = 0; ///< prey solved during the epoch
    double best_hp = 0.0; ///< highest remaining hit-points among the living
};

/// Diagnostics/test hook into the epoch loop. All methods default to no-ops.
class CoevoObserver {
public:
    virtual ~CoevoObserver() = default;
    virtual void on_epoch_start(int /*epoch*/, const std::vector<QuadraticPrey>& /*pool*/) {}
    /// After every single evaluation (including a fatal one); p already
    /// carries the post-evaluation state.
    virtual void on_evaluation(const Predator& /*p*/, double /*hp_before*/,
                               const std::vector<QuadraticPrey>& /*pool*/) {}
    virtual void on_parents(const Predator& /*primary*/, const Predator& /*secondary*/) {}
    virtual void on_child(const Predator& /*child*/) {}
    virtual void on_epoch_end(const EpochStats& /*stats*/) {}
};

/// What one predator did during an epoch.
struct EvalOutcome {
    int evaluations = 0;      ///< scored evaluations (deductions applied)
    int solves = 0;           ///< prey this predator marked solved
    bool died_by_error = false;
};

/// Expands (x-alpha)(x-beta): A=1, B=-(alpha+beta), C=alpha·beta.
QuadraticPrey prey_from_roots(double alpha, double beta);

/// Fresh prey with both roots uniform in root_range.
QuadraticPrey gen_prey(Interval root_range, Rng& rng);

/// Runs p against randomly chosen unsolved prey, at most
/// config.evaluations_per_epoch times, stopping early when p dies or the pool
/// is exhausted. An accurate root (within accuracy_tolerance of either true
/// root) costs reward_deduction and marks the prey solved; a miss costs
/// penalty_deduction; an evaluation error kills p outright.
EvalOutcome evaluate_predator(Predator& p, std::vector<QuadraticPrey>& pool,
                              const CoevoConfig& config, Rng& rng,
                              CoevoObserver* observer = nullptr);

/// Sorts survivors by remaining hit-points (descending), splits at the median
/// (odd counts put the extra member in the high group), and produces
/// config.predator_count children by subtree crossover: one parent drawn from
/// each group, one of the two picked uniformly as primary, a random subtree of
/// the primary's copy replaced by a copy of a random subtree of the secondary.
/// Children start at initial_hp; depth is clamped to max_tree_depth.
/// Throws std::invalid_argument with fewer than 2 survivors (extinction).
std::vector<Predator> recombine(std::span<const Predator> survivors,
                                const CoevoConfig& config, Rng& rng,
                                CoevoObserver* observer = nullptr);

struct CoevoResult {
    Predator best;                 ///< highest remaining hit-points ever observed
    std::vector<EpochStats> stats; ///< one row per recorded epoch
};

/// Epoch loop: regenerate the prey pool, evaluate every living predator, cull
/// the dead, recombine the survivors (re-seeding with fresh random trees on
/// extinction). Stops after max_epochs, or early when one predator solves
/// every prey of an epoch without dying. Deterministic in config.rng_seed.
///
/// "Best" ranks predators that ended an epoch alive (having scored at least
/// one evaluation) by remaining hit-points, earliest observation winning ties.
/// If no predator ever survives an epoch, the fallback ranks the dead by
/// evaluations survived, then by hit-points at death.
///
/// max_epochs == 0 performs a single evaluation pass over the initial
/// population to pick a best, but records no stats rows.
CoevoResult run_coevolution(const CoevoConfig& config, CoevoObserver* observer = nullptr);

/// Fraction of `trials` fresh prey whose root p's tree reproduces within
/// accuracy_tolerance; evaluation errors count as misses.
double success_rate(const Predator& p, int trials, const CoevoConfig& config, Rng& rng);

} // namespace quadevo::coevo
