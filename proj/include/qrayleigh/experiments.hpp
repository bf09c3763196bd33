// experiments.hpp: Figure datasets, Onsager tables and coupling sweeps

#pragma once

#include <string>
#include <vector>

#include "qrayleigh/config.hpp"
#include "qrayleigh/csv.hpp"
#include "qrayleigh/measures.hpp"
#include "qrayleigh/states.hpp"

namespace qrayleigh::experiments {

struct Output {
    csv::Table table;
    std::vector<std::string> notes; // one-line summaries printed by the CLI
};

// Defaults shared by the figure experiments: E = (1, 2), beta_B = 2,
// collective, J tau = 0.05, p = 1.
BathParams figure_defaults();

struct Fig3Options {
    BathParams bath = figure_defaults();
    int n_chi{41};
    measures::LogUnit units{measures::LogUnit::Nats};
};

struct Fig4Options {
    BathParams bath = figure_defaults();
    double t_max{250.0};
    int n_t{51};
    int n_chi{21};
    double jt_max{3.14159265358979323846};
    int n_jt{61};
};

struct Fig5Options {
    BathParams bath = figure_defaults();
    double beta_s0{1.0 / 0.6};
    double t_max{250.0};
    int n_t{51};
    int n_chi{21};
    double t_probe{0.1};
    double jt_max{3.14159265358979323846};
    int n_jt{61};
};

struct Fig6Panel {
    double beta_b;
    double beta_s;
};

struct Fig6Options {
    double coupling{0.05};
    QubitSpec qubit{};
    std::vector<Fig6Panel> panels{{10, 10}, {10, 4}, {4, 4}, {4, 2}};
    int n_t{101};
};

struct Fig7Options {
    BathParams bath = [] {
        BathParams b = figure_defaults();
        b.kind = ProjectileKind::Entangled;
        b.coupling = 0.2;
        return b;
    }();
    double beta_s0{2.0};
    std::vector<double> chi{0.0, 0.25, 0.5, 0.75, 1.0};
    double t_max{30.0};
    int n_t{61};
};

struct OnsagerOptions {
    BathParams bath = figure_defaults();
    std::vector<double> beta_gap{0.05, 0.1, 0.5, 1.0}; // beta_B (E_e - E_g)
    double step_beta{1e-4};
    double step_c{1e-4};
};

struct SweepOptions {
    BathParams bath = figure_defaults();
    std::vector<double> jt; // empty: built-in log + linear grid
    double fit_jt_max{0.01};
};

Fig3Options read_fig3(const config::RunConfig& rc);
Fig4Options read_fig4(const config::RunConfig& rc);
Fig5Options read_fig5(const config::RunConfig& rc);
Fig6Options read_fig6(const config::RunConfig& rc);
Fig7Options read_fig7(const config::RunConfig& rc);
OnsagerOptions read_onsager(const config::RunConfig& rc);
SweepOptions read_sweep(const config::RunConfig& rc);

Output fig3(const Fig3Options& o);
Output fig4(const Fig4Options& o);
Output fig5(const Fig5Options& o);
Output fig6(const Fig6Options& o);
Output fig7(const Fig7Options& o);
Output onsager(const OnsagerOptions& o);
Output sweep(const SweepOptions& o);

/// Steady temperature and t = 0 heat current of the four-qubit block as
/// functions of mu, measured relative to mu = 0, with log-log slopes.
struct MuScaling {
    std::vector<double> mu;
    std::vector<double> temperature_shift;
    std::vector<double> current_shift;
    double temperature_exponent{0.0};
    double current_exponent{0.0};
    double temperature_mu2_slope{0.0}; // least squares of shift vs mu^2
};

MuScaling mu_scaling(const BathParams& entangled, double beta_s0, const std::vector<double>& chi);

/// Small-J tau behaviour of the collective coefficient.
struct CollectivityFit {
    double leading_ratio{0.0}; // fitted L / (8 (J tau)^2 dE^2 p / 4)
    double sequential_ratio{0.0}; // L_seq / L_col at the smallest J tau
};

CollectivityFit collectivity_fit(const BathParams& bath, const std::vector<double>& jt);

// Reads the options for rc.experiment, rejects unread keys, and runs it.
Output run(const config::RunConfig& rc);

} // namespace qrayleigh::experiments
