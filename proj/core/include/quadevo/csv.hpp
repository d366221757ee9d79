#pragma once

#include "quadevo/coevolution.hpp"
#include "quadevo/ga.hpp"

#include <string>
#include <vector>

namespace quadevo::csv {

/// Up to 10 significant digits ("%.10g"), the CLI/CSV real format.
std::string format_real(double v);

/// Header generation,evaluations,best_fitness,best_x; one row per evaluated
/// generation; "\n" line endings.
std::string ga_history_csv(const ga::RunHistory& history);

/// Header epoch,alive_count,solved_count,best_hp; one row per recorded epoch.
std::string epoch_stats_csv(const std::vector<coevo::EpochStats>& stats);

} // namespace quadevo::csv
