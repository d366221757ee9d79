#include "quadevo/coevolution.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace quadevo::coevo {

namespace {

// Prey coefficients bind to these letters; random trees draw leaves from them.
constexpr std::string_view prey_identifiers = "ABC";

} // namespace

void CoevoConfig::validate() const {
    if (predator_count < 1) {
        throw std::invalid_argument("CoevoConfig: predator_count must be at least 1");
    }
    if (prey_count < 1) {
        throw std::invalid_argument("CoevoConfig: prey_count must be at least 1");
    }
    if (initial_hp <= 0.0) {
        throw std::invalid_argument("CoevoConfig: initial_hp must be positive");
    }
    if (reward_deduction <= 0.0 || penalty_deduction <= 0.0) {
        throw std::invalid_argument("CoevoConfig: deductions must be positive");
    }
    if (reward_deduction >= penalty_deduction) {
        throw std::invalid_argument("CoevoConfig: reward_deduction must be below penalty_deduction");
    }
    if (accuracy_tolerance <= 0.0) {
        throw std::invalid_argument("CoevoConfig: accuracy_tolerance must be positive");
    }
    if (evaluations_per_epoch < 1) {
        throw std::invalid_argument("CoevoConfig: evaluations_per_epoch must be at least 1");
    }
    if (root_range.degenerate()) {
        throw std::invalid_argument("CoevoConfig: root_range must be non-degenerate");
    }
    if (max_epochs < 0) {
        throw std::invalid_argument("CoevoConfig: max_epochs must be non-negative");
    }
    if (max_tree_depth < 1) {
        throw std::invalid_argument("CoevoConfig: max_tree_depth must be at least 1");
    }
}

QuadraticPrey prey_from_roots(double alpha, double beta) {
    QuadraticPrey prey;
    prey.root1 = alpha;
    prey.root2 = beta;
    prey.a = 1.0;
    prey.b = -(alpha + beta);
    prey.c = alpha * beta;
    prey.solved = false;
    return prey;
}

QuadraticPrey gen_prey(Interval root_range, Rng& rng) {
    assert(!root_range.degenerate());
    const double alpha = rng.uniform(root_range);
    const double beta = rng.uniform(root_range);
    return prey_from_roots(alpha, beta);
}

EvalOutcome evaluate_predator(Predator& p, std::vector<QuadraticPrey>& pool,
                              const CoevoConfig& config, Rng& rng, CoevoObserver* observer) {
    EvalOutcome outcome;
    std::vector<std::size_t> unsolved;
    unsolved.reserve(pool.size());

    for (int k = 0; k < config.evaluations_per_epoch && p.alive; ++k) {
        unsolved.clear();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!pool[i].solved) {
                unsolved.push_back(i);
            }
        }
        if (unsolved.empty()) {
            break;
        }
        QuadraticPrey& prey = pool[unsolved[rng.index(unsolved.size())]];

        sexpr::Bindings env;
        env.set('A', prey.a);
        env.set('B', prey.b);
        env.set('C', prey.c);

        const double hp_before = p.hit_points;
        double candidate = 0.0;
        try {
            candidate = sexpr::evaluate(*p.tree, env);
        } catch (const sexpr::EvalError&) {
            p.alive = false;
            outcome.died_by_error = true;
            if (observer) {
                observer->on_evaluation(p, hp_before, pool);
            }
            break;
        }

        ++outcome.evaluations;
        const double miss =
            std::min(std::abs(candidate - prey.root1), std::abs(candidate - prey.root2));
        if (miss <= config.accuracy_tolerance) {
            p.hit_points -= config.reward_deduction;
            prey.solved = true;
            ++outcome.solves;
        } else {
            p.hit_points -= config.penalty_deduction;
        }
        if (p.hit_points <= 0.0) {
            p.alive = false;
        }
        if (observer) {
            observer->on_evaluation(p, hp_before, pool);
        }
    }
    return outcome;
}

std::vector<Predator> recombine(std::span<const Predator> survivors, const CoevoConfig& config,
                                Rng& rng, CoevoObserver* observer) {
    if (survivors.size() < 2) {
        throw std::invalid_argument("recombine: extinction, need at least 2 survivors");
    }

    std::vector<const Predator*> ranked;
    ranked.reserve(survivors.size());
    for (const Predator& survivor : survivors) {
        ranked.push_back(&survivor);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const Predator* x, const Predator* y) {
        return x->hit_points > y->hit_points;
    });

    // Odd counts put the extra member in the high group.
    const std::size_t high_size = (ranked.size() + 1) / 2;
    const std::span<const Predator*> high(ranked.data(), high_size);
    const std::span<const Predator*> low(ranked.data() + high_size, ranked.size() - high_size);

    std::vector<Predator> children;
    children.reserve(config.predator_count);
    for (int k = 0; k < config.predator_count; ++k) {
        const Predator* from_high = high[rng.index(high.size())];
        const Predator* from_low = low[rng.index(low.size())];
        const Predator* primary = rng.coin() ? from_low : from_high;
        const Predator* secondary = primary == from_high ? from_low : from_high;
        if (observer) {
            observer->on_parents(*primary, *secondary);
        }

        sexpr::ExprPtr child_tree = primary->tree->clone();
        sexpr::ExprPtr* slot = sexpr::subtree_slot(child_tree, rng.index(sexpr::node_count(*child_tree)));
        const sexpr::Expr& donor =
            sexpr::node_at(*secondary->tree, rng.index(sexpr::node_count(*secondary->tree)));
        *slot = donor.clone();
        sexpr::clamp_depth(child_tree, config.max_tree_depth, prey_identifiers,
                           config.root_range, rng);

        children.push_back(Predator{std::move(child_tree), config.initial_hp, true});
        if (observer) {
            observer->on_child(children.back());
        }
    }
    return children;
}

namespace {

// "Best ever observed": survivors of an epoch rank by remaining hit-points
// (earliest wins ties); when no predator ever survives an epoch, the dead
// rank by evaluations survived, then hit-points at death. Error-killed
// predators therefore never outrank a live competitor on untouched HP.
class BestTracker {
public:
    void offer(const Predator& p, int evaluations) {
        const bool candidate_survived = p.alive && evaluations > 0;
        if (candidate_survived) {
            if (!has_ || !survivor_ || p.hit_points > snapshot_.hit_points) {
                take(p, evaluations, true);
            }
            return;
        }
        if (has_ && survivor_) {
            return;
        }
        if (!has_ || evaluations > evaluations_ ||
            (evaluations == evaluations_ && p.hit_points > snapshot_.hit_points)) {
            take(p, evaluations, false);
        }
    }

    bool has() const { return has_; }

    Predator release() { return std::move(snapshot_); }

private:
    void take(const Predator& p, int evaluations, bool survived) {
        snapshot_ = Predator{p.tree->clone(), p.hit_points, p.alive};
        evaluations_ = evaluations;
        survivor_ = survived;
        has_ = true;
    }

    Predator snapshot_;
    int evaluations_ = -1;
    bool survivor_ = false;
    bool has_ = false;
};

} // namespace

CoevoResult run_coevolution(const CoevoConfig& config, CoevoObserver* observer) {
    config.validate();
    Rng rng(config.rng_seed);

    auto fresh_population = [&config, &rng] {
        std::vector<Predator> population;
        population.reserve(config.predator_count);
        for (int i = 0; i < config.predator_count; ++i) {
            population.push_back(Predator{sexpr::random_tree(config.max_tree_depth,
                                                             prey_identifiers,
                                                             config.root_range, rng),
                                          config.initial_hp, true});
        }
        return population;
    };

    auto population = fresh_population();
    if (config.inject_oracle) {
        population[0].tree = sexpr::quadratic_formula_tree(sexpr::RootSign::Plus);
    }

    CoevoResult result;
    BestTracker tracker;
    const bool single_pass = config.max_epochs == 0;

    for (int epoch = 1; single_pass ? epoch == 1 : epoch <= config.max_epochs; ++epoch) {
        std::vector<QuadraticPrey> pool;
        pool.reserve(config.prey_count);
        for (int i = 0; i < config.prey_count; ++i) {
            pool.push_back(gen_prey(config.root_range, rng));
        }
        if (observer) {
            observer->on_epoch_start(epoch, pool);
        }

        bool pool_cleared_by_one = false;
        for (Predator& p : population) {
            if (!p.alive) {
                continue;
            }
            const EvalOutcome outcome = evaluate_predator(p, pool, config, rng, observer);
            tracker.offer(p, outcome.evaluations);
            if (p.alive && outcome.solves == config.prey_count) {
                pool_cleared_by_one = true;
            }
        }

        EpochStats stats;
        stats.epoch = epoch;
        for (const Predator& p : population) {
            if (p.alive) {
                ++stats.alive_count;
                stats.best_hp = std::max(stats.best_hp, p.hit_points);
            }
        }
        for (const QuadraticPrey& prey : pool) {
            if (prey.solved) {
                ++stats.solved_count;
            }
        }

        if (!single_pass) {
            result.stats.push_back(stats);
            if (observer) {
                observer->on_epoch_end(stats);
            }
        }

        if (single_pass || pool_cleared_by_one || epoch == config.max_epochs) {
            break;
        }

        population.erase(std::remove_if(population.begin(), population.end(),
                                        [](const Predator& p) { return !p.alive; }),
                         population.end());
        if (population.size() < 2) {
            population = fresh_population();
        } else {
            population = recombine(population, config, rng, observer);
        }
    }

    assert(tracker.has());
    result.best = tracker.release();
    return result;
}

double success_rate(const Predator& p, int trials, const CoevoConfig& config, Rng& rng) {
    assert(trials > 0);
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        const QuadraticPrey prey = gen_prey(config.root_range, rng);
        sexpr::Bindings env;
        env.set('A', prey.a);
        env.set('B', prey.b);
        env.set('C', prey.c);
        double candidate = 0.0;
        try {
            candidate = sexpr::evaluate(*p.tree, env);
        } catch (const sexpr::EvalError&) {
            continue;
        }
        const double miss =
            std::min(std::abs(candidate - prey.root1), std::abs(candidate - prey.root2));
        if (miss <= config.accuracy_tolerance) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

} // namespace quadevo::coevo
