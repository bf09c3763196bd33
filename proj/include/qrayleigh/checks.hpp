// checks.hpp: Invariant suite behind `qrayleigh checks` and the acceptance gate

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrayleigh/config.hpp"

namespace qrayleigh::checks {

struct CheckResult {
    int id{0};
    std::string name;
    bool passed{false};
    double residual{0.0};
    double tolerance{0.0};
    double seconds{0.0};
    double time_limit{0.0}; // 0 when unbounded
    std::string detail;
};

struct SuiteOptions {
    std::uint64_t seed{20240611};
    int ode_draws{200};
    int stochastic_configs{10};
    int n_traj{10000};
    int inhibition_draws{50};
    int second_law_samples{1000};
    int mu_invariance_draws{20};
    int discord_grid{21};
    std::size_t threads{0};
};

CheckResult analytic_vs_ode(const SuiteOptions& o);
CheckResult stochastic_oracle(const SuiteOptions& o);
CheckResult steady_temperature(const SuiteOptions& o);
CheckResult heat_flow_inhibition(const SuiteOptions& o);
CheckResult anomalous_current(const SuiteOptions& o);
CheckResult onsager_reciprocity(const SuiteOptions& o);
CheckResult second_law(const SuiteOptions& o);
CheckResult two_bath_first_law(const SuiteOptions& o);
CheckResult mu_invariance(const SuiteOptions& o);
CheckResult four_qubit_block(const SuiteOptions& o);
CheckResult micro_current_structure(const SuiteOptions& o);
CheckResult collectivity(const SuiteOptions& o);
CheckResult fokker_planck(const SuiteOptions& o);
CheckResult measures_suite(const SuiteOptions& o);

// The fourteen criteria above, in order.
std::vector<CheckResult> acceptance_suite(const SuiteOptions& o);

// Additional invariants reported by `qrayleigh checks`.
std::vector<CheckResult> invariant_suite(const SuiteOptions& o);

SuiteOptions read_suite_options(const config::RunConfig& rc);

// Pretty-printed JSON document with one entry per check.
std::string json_report(const std::vector<CheckResult>& results, std::uint64_t seed);

} // namespace qrayleigh::checks
