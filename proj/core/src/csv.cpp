#include "quadevo/csv.hpp"

#include <cstdio>

namespace quadevo::csv {

std::string format_real(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.10g", v);
    return buffer;
}

std::string ga_history_csv(const ga::RunHistory& history) {
    std::string out = "generation,evaluations,best_fitness,best_x\n";
    for (const auto& entry : history.per_generation_best) {
        out += std::to_string(entry.generation);
        out += ',';
        out += std::to_string(entry.evaluations);
        out += ',';
        out += format_real(entry.best_fitness);
        out += ',';
        out += format_real(entry.best_x);
        out += '\n';
    }
    return out;
}

std::string epoch_stats_csv(const std::vector<coevo::EpochStats>& stats) {
    std::string out = "epoch,alive_count,solved_count,best_hp\n";
    for (const auto& row : stats) {
        out += std::to_string(row.epoch);
        out += ',';
        out += std::to_string(row.alive_count);
        out += ',';
        out += std::to_string(row.solved_count);
        out += ',';
        out += format_real(row.best_hp);
        out += '\n';
    }
    return out;
}

} // namespace quadevo::csv
