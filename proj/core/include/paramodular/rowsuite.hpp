#pragma once

#include <string>
#include <vector>

#include "paramodular/localdata.hpp"
#include "paramodular/tables.hpp"

namespace paramodular {

/// One sample per row of the invariant table, with consistent caller data.
struct RowCase {
    std::string id;
    InducingData data;
    std::vector<std::string> quadratic_symbols; // free symbols with chi^2 = 1
    /// Optional parenthetical level identities carried by a few rows:
    /// N = 4 a(alpha_hat) resp. N = 2 a(pi0_hat); -1 when absent.
    int expect_four_a_hat = -1;
    int expect_two_a_hat = -1;
};

std::vector<RowCase> table_row_cases();

struct CheckResult {
    std::string id;
    bool ok = false;
    std::string detail;
};

bool all_ok(const std::vector<CheckResult>& rs);

/// Row-by-row identity suite: factor equality, conductor and epsilon
/// cross-checks, quadratic-symbol substitution sweeps.
std::vector<CheckResult> run_table_suite();

/// The per-prime eigenvalue formulas, instantiated branch by branch
/// through local inducing data and compared with the table lookup.
/// The split branch with both local levels 1 uses the corrected form
/// mu_p = -p^2 + p lambda_{w1} lambda_{w2}.
std::vector<CheckResult> run_formula_suite();

/// Randomized similitude checks of the two parameter constructions.
std::vector<CheckResult> run_similitude_trials(unsigned seed, int trials);

} // namespace paramodular
