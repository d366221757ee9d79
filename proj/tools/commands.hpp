#pragma once

#include "quadevo/coevolution.hpp"
#include "quadevo/ga.hpp"

#include <string>
#include <vector>

namespace quadevo::cli {

struct SolveOptions {
    double n = 0.0;
    double m = 0.0;
    ga::GaConfig ga;
    std::string out_path; ///< empty: no CSV written
    int runs = 1;
};

struct CoevolveOptions {
    coevo::CoevoConfig config;
    std::string out_path;      ///< empty: no stats CSV written
    std::string best_out_path; ///< empty: best expression only echoed to stdout
    int runs = 1;
};

struct EvalExprOptions {
    std::string expr;
    std::vector<std::string> binds; ///< LETTER=VALUE
};

/// Exit 0 when every run reached the fitness tolerance, 2 otherwise,
/// 1 on invalid flag values or unwritable output.
int cmd_solve(const SolveOptions& options);

/// Exit 0 on clean completion, 1 on invalid flag values or unwritable output.
int cmd_coevolve(const CoevolveOptions& options);

/// Exit 0 and the value on stdout; 1 on a parse error (position reported),
/// 3 on an evaluation error (kind reported).
int cmd_eval_expr(const EvalExprOptions& options);

} // namespace quadevo::cli
