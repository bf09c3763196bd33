#include "qrayleigh/checks.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"

#include "qrayleigh/collision.hpp"
#include "qrayleigh/dynamics.hpp"
#include "qrayleigh/errors.hpp"
#include "qrayleigh/experiments.hpp"
#include "qrayleigh/fpcheck.hpp"
#include "qrayleigh/measures.hpp"
#include "qrayleigh/parallel.hpp"
#include "qrayleigh/thermo.hpp"

namespace qrayleigh::checks {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(g_); }

private:
    std::mt19937_64 g_;
};

const QubitSpec kQubit{1.0, 2.0};

BathParams random_bath(Rng& rng, bool discordant_only, double jt_lo = 0.05, double jt_hi = 1.2) {
    static const ProjectileKind all[] = {ProjectileKind::Classical, ProjectileKind::Discordant,
                                         ProjectileKind::Entangled, ProjectileKind::Product};
    BathParams b;
    b.kind = discordant_only ? ProjectileKind::Discordant : all[rng.pick(4)];
    b.scenario = rng.pick(2) ? Scenario::Collective : Scenario::Sequential;
    b.beta_b = rng.uniform(0.3, 4.0);
    b.coupling = rng.uniform(jt_lo, jt_hi);
    b.tau = 1.0;
    b.rate = rng.uniform(0.5, 2.0);
    b.qubit = kQubit;
    b.coherence = rng.uniform(-1.0, 1.0) * coherence_bounds(b.kind, b.beta_b, b.qubit).upper;
    return b;
}

std::string describe(const BathParams& b) {
    std::ostringstream s;
    s.precision(6);
    s << to_string(b.kind) << "/" << to_string(b.scenario) << " beta_b=" << b.beta_b << " coherence=" << b.coherence
      << " Jtau=" << b.coupling_time() << " p=" << b.rate;
    return s.str();
}

template <class F>
CheckResult timed(int id, std::string name, double limit, F&& body) {
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    r.time_limit = limit;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0.0 && r.seconds > limit) {
        r.passed = false;
        r.detail += " (runtime over limit)";
    }
    return r;
}

std::string num(double x) {
    std::ostringstream s;
    s.precision(4);
    s << x;
    return s.str();
}

double excited(const DensityMatrix& rho) { return rho.population(1); }

} // namespace

CheckResult analytic_vs_ode(const SuiteOptions& o) {
    return timed(1, "analytic/ODE agreement", 10.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 1));
        std::vector<BathParams> baths;
        std::vector<double> beta0;
        for (int i = 0; i < o.ode_draws; ++i) {
            baths.push_back(random_bath(rng, false));
            beta0.push_back(rng.uniform(0.3, 4.0));
        }
        std::vector<double> dev(baths.size());
        parallel::parallel_for(
            baths.size(),
            [&](std::size_t i) {
                const auto& b = baths[i];
                const double decay = dynamics::closed_form_coefficients(b).decay_rate;
                const double t_end = std::min(5.0 / decay, 50.0 / b.rate);
                std::vector<double> grid;
                for (int k = 0; k <= 20; ++k) grid.push_back(t_end * k / 20.0);
                const std::array<BathParams, 1> one{b};
                const auto traj = dynamics::integrate_master_equation(thermal_qubit(beta0[i], b.qubit), one, grid);
                double worst = 0.0;
                for (std::size_t k = 0; k < grid.size(); ++k)
                    worst = std::max(worst, std::abs(excited(traj.states[k]) -
                                                     excited(dynamics::analytic_state(grid[k], beta0[i], b))));
                dev[i] = worst;
            },
            o.threads);
        const auto worst = std::max_element(dev.begin(), dev.end());
        r.residual = *worst;
        r.tolerance = 1e-8;
        r.passed = r.residual < r.tolerance;
        r.detail = std::to_string(o.ode_draws) + " draws, worst at " +
                   describe(baths[static_cast<std::size_t>(worst - dev.begin())]);
    });
}

CheckResult stochastic_oracle(const SuiteOptions& o) {
    return timed(2, "stochastic oracle", 60.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 2));
        double worst_sigma = 0.0;
        int points = 0;
        for (int c = 0; c < o.stochastic_configs; ++c) {
            const BathParams b = random_bath(rng, false, 0.3, 1.0);
            const double beta0 = rng.uniform(0.3, 4.0);
            const double decay = dynamics::closed_form_coefficients(b).decay_rate;
            std::vector<double> grid;
            for (int k = 0; k <= 10; ++k) grid.push_back(3.0 / decay * k / 10.0);
            const auto ens = dynamics::stochastic_trajectories(thermal_qubit(beta0, b.qubit), b, grid, o.n_traj,
                                                               parallel::split_seed(o.seed, 100 + c), o.threads);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double diff =
                    std::abs(ens.mean_excited_population[k] - excited(dynamics::analytic_state(grid[k], beta0, b)));
                ++points;
                // Round-off floor for grid points where every trajectory agrees.
                if (diff > 1e-12) worst_sigma = std::max(worst_sigma, diff / ens.std_error[k]);
            }
        }
        r.residual = worst_sigma;
        r.tolerance = 4.0;
        r.passed = worst_sigma <= 4.0;
        r.detail = std::to_string(o.stochastic_configs) + " configs x " + std::to_string(o.n_traj) +
                   " trajectories, " + std::to_string(points) + " grid points, worst deviation " + num(worst_sigma) +
                   " standard errors";
    });
}

CheckResult steady_temperature(const SuiteOptions&) {
    return timed(3, "steady-state temperature", 0.0, [&](CheckResult& r) {
        BathParams b = experiments::figure_defaults();
        b.coherence = coherence_bounds(b.kind, b.beta_b, b.qubit).upper;
        const double formula = thermo::steady_temperature(b);
        const double decay = dynamics::closed_form_coefficients(b).decay_rate;
        const std::array<BathParams, 1> one{b};
        const std::vector<double> grid{0.0, 40.0 / decay};
        const auto traj = dynamics::integrate_master_equation(thermal_qubit(b.beta_b, b.qubit), one, grid);
        const double trajectory = thermo::temperature_of(traj.states.back(), b.qubit);
        const double dev = std::abs(formula - trajectory);

        double high_t = 0.0;
        for (Scenario s : {Scenario::Sequential, Scenario::Collective}) {
            BathParams h = b;
            h.scenario = s;
            h.beta_b = 0.05 / h.qubit.gap();
            h.coherence = coherence_bounds(h.kind, h.beta_b, h.qubit).upper;
            const double alpha = dynamics::closed_form_coefficients(h).alpha;
            const double approx = (1.0 / h.beta_b) * (1.0 + 2.0 * alpha * h.coherence);
            high_t = std::max(high_t, std::abs(approx / thermo::steady_temperature(h) - 1.0));
        }
        r.residual = dev;
        r.tolerance = 1e-6;
        r.passed = dev < 1e-6 && high_t < 0.01;
        r.detail = "T_inf formula " + num(formula) + ", trajectory deviation " + num(dev) +
                   ", high-T relative error " + num(high_t);
    });
}

CheckResult heat_flow_inhibition(const SuiteOptions& o) {
    return timed(4, "heat-flow inhibition", 0.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 4));
        double worst = 0.0;
        for (int i = 0; i < o.inhibition_draws; ++i) {
            const BathParams b = random_bath(rng, true);
            const double beta0 = thermo::steady_inverse_temperature(b);
            for (int k = 0; k <= 20; ++k) {
                const double t = k * 5.0;
                worst = std::max(worst, std::abs(thermo::heat_current(t, beta0, b)));
            }
        }
        r.residual = worst;
        r.tolerance = 1e-14;
        r.passed = worst < 1e-14;
        r.detail = std::to_string(o.inhibition_draws) + " random lambda draws, max |J| " + num(worst);
    });
}

CheckResult anomalous_current(const SuiteOptions& o) {
    return timed(5, "anomalous current", 0.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 5));
        double worst = 0.0;
        bool iff = true;
        for (int i = 0; i < 50; ++i) {
            BathParams b = random_bath(rng, true);
            if (i % 5 == 0) b.coherence = 0.0;
            const auto c = dynamics::closed_form_coefficients(b);
            const auto q = gibbs_weights(b.beta_b, b.qubit);
            const double expected = b.coherence * c.eta * (q.ground - q.excited) * b.qubit.gap() * b.rate;
            const double got = thermo::heat_current(0.0, b.beta_b, b);
            const double special = thermo::anomalous_heat_current(0.0, b).value;
            worst = std::max({worst, std::abs(got - expected), std::abs(special - expected)});
            if ((got != 0.0) != (b.coherence != 0.0)) iff = false;
        }
        r.residual = worst;
        r.tolerance = 1e-12;
        r.passed = worst < 1e-12 && iff;
        r.detail = "max deviation " + num(worst) + (iff ? ", nonzero iff lambda != 0" : ", nonzero-iff violated");
    });
}

CheckResult onsager_reciprocity(const SuiteOptions&) {
    return timed(6, "Onsager reciprocity", 0.0, [&](CheckResult& r) {
        double sym = 0.0, match = 0.0, closed = 0.0;
        for (Scenario s : {Scenario::Sequential, Scenario::Collective}) {
            BathParams b = experiments::figure_defaults();
            b.scenario = s;
            b.beta_b = 0.05 / b.qubit.gap();
            const auto c = thermo::onsager_coefficients(b, b.beta_b);
            closed = std::max(closed, std::abs(c.l_hc - c.l_ch));
            const auto n = thermo::extract_onsager_numeric(b, 1e-4 * b.beta_b, 1e-4).matrix;
            sym = std::max(sym, std::abs(n.l_hc - n.l_ch) / std::abs(n.l_hc));
            for (double v : {n.l_hh, n.l_hc, n.l_ch, n.l_cc}) match = std::max(match, std::abs(v / c.l_hh - 1.0));
        }
        r.residual = std::max(sym, match);
        r.tolerance = 0.02;
        r.passed = closed == 0.0 && sym < 0.02 && match < 0.02;
        r.detail = "closed-form |L_hc - L_ch| " + num(closed) + ", numeric asymmetry " + num(sym) +
                   ", max deviation from closed form " + num(match);
    });
}

CheckResult second_law(const SuiteOptions& o) {
    return timed(7, "second law", 0.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 7));
        double lowest = 0.0, at_steady = 0.0;
        for (int i = 0; i < o.second_law_samples; ++i) {
            const BathParams b = random_bath(rng, false, 0.05, 3.0);
            const double beta0 = rng.uniform(0.3, 4.0);
            const double decay = dynamics::closed_form_coefficients(b).decay_rate;
            const double t = rng.uniform(0.0, 5.0 / std::max(decay, 1e-6));
            lowest = std::min(lowest, thermo::entropy_production(t, beta0, b).production);
            at_steady = std::max(at_steady, std::abs(thermo::entropy_production(
                                                std::numeric_limits<double>::infinity(), beta0, b).production));
        }
        r.residual = -lowest;
        r.tolerance = 1e-12;
        r.passed = lowest >= -1e-12 && at_steady == 0.0;
        r.detail = std::to_string(o.second_law_samples) + " samples, min Pi " + num(lowest) + ", max |Pi(inf)| " +
                   num(at_steady);
    });
}

CheckResult two_bath_first_law(const SuiteOptions& o) {
    return timed(8, "two-bath first law", 0.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 8));
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            BathParams a = random_bath(rng, true), b = a;
            b.beta_b = rng.uniform(0.3, 4.0);
            b.coherence = rng.uniform(-1.0, 1.0) * coherence_bounds(b.kind, b.beta_b, b.qubit).upper;
            const auto st = thermo::two_bath_steady(a, b);
            worst = std::max(worst, std::abs(st.j_h_bath1 + st.j_h_bath2));
        }
        BathParams a = experiments::figure_defaults(), b = a;
        a.coherence = coherence_bounds(a.kind, a.beta_b, a.qubit).upper;
        const auto peltier = thermo::two_bath_steady(a, b);
        worst = std::max(worst, std::abs(peltier.j_h_bath1 + peltier.j_h_bath2));
        r.residual = worst;
        r.tolerance = 1e-12;
        r.passed = worst < 1e-12 && std::abs(peltier.j_h_bath1) > 0.0;
        r.detail = "max |J_h + J_h'| " + num(worst) + ", coherent Peltier |J_h| " + num(std::abs(peltier.j_h_bath1));
    });
}

CheckResult mu_invariance(const SuiteOptions& o) {
    return timed(9, "mu-invariance of a single pair", 0.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 9));
        double worst = 0.0, thermal = 0.0, non_secular = 0.0;
        // Column-stacked index k = i + 2 j carries frequency i - j.
        auto frequency = [](int k) { return (k % 2) - (k / 2); };
        auto channel = [](const DensityMatrix& rho_b, const Matrix& u) {
            Matrix sup(4, 4);
            for (int k = 0; k < 4; ++k) {
                Matrix e = Matrix::Zero(2, 2);
                e(k % 2, k / 2) = 1.0;
                const Matrix out = collision::collide(e, rho_b.matrix(), u);
                for (int m = 0; m < 4; ++m) sup(m, k) = out(m % 2, m / 2);
            }
            return sup;
        };
        for (int i = 0; i < o.mu_invariance_draws; ++i) {
            BathParams e = random_bath(rng, false);
            e.kind = ProjectileKind::Entangled;
            e.coherence = rng.uniform(-1.0, 1.0) * coherence_bounds(e.kind, e.beta_b, e.qubit).upper;
            BathParams c = e;
            c.kind = ProjectileKind::Classical;
            c.coherence = 0.0;
            const std::array<BathParams, 1> be{e}, bc{c};
            worst = std::max(worst, (dynamics::generator_superoperator(be) - dynamics::generator_superoperator(bc))
                                        .cwiseAbs()
                                        .maxCoeff());
            const auto u = collision::cached_unitary(e.scenario, e.coupling, e.tau);
            const Matrix diff = channel(projectile_state(e), u->matrix) - channel(projectile_state(c), u->matrix);
            for (int m = 0; m < 4; ++m)
                for (int k = 0; k < 4; ++k) {
                    if (frequency(m) == frequency(k))
                        worst = std::max(worst, std::abs(diff(m, k)));
                    else
                        non_secular = std::max(non_secular, std::abs(diff(m, k)));
                }
            const auto rates = dynamics::population_rates(bc);
            const double beta = std::log(rates.emission / rates.absorption) / c.qubit.gap();
            thermal = std::max(thermal, std::abs(beta - c.beta_b));
        }
        r.residual = std::max(worst, thermal);
        r.tolerance = 1e-12;
        r.passed = worst < 1e-12 && thermal < 1e-12;
        r.detail = std::to_string(o.mu_invariance_draws) + " draws, generator and secular channel difference " +
                   num(worst) + ", classical steady-state |beta - beta_B| " + num(thermal) +
                   "; fixed-frame non-secular channel entries differ by up to " + num(non_secular);
    });
}

CheckResult four_qubit_block(const SuiteOptions&) {
    return timed(10, "four-qubit block mu^2 scaling", 120.0, [&](CheckResult& r) {
        BathParams b = experiments::figure_defaults();
        b.kind = ProjectileKind::Entangled;
        b.coupling = 0.2;
        std::vector<double> chi;
        for (int i = 0; i < 8; ++i) chi.push_back(0.01 * std::pow(30.0, i / 7.0));
        const auto s = experiments::mu_scaling(b, b.beta_b, chi);
        const double dev = std::max(std::abs(s.temperature_exponent - 2.0), std::abs(s.current_exponent - 2.0));
        r.residual = dev;
        r.tolerance = 0.05;
        r.passed = dev <= 0.05 && s.temperature_mu2_slope != 0.0;
        r.detail = "exponents: temperature " + num(s.temperature_exponent) + ", current " + num(s.current_exponent) +
                   "; dT/dmu^2 " + num(s.temperature_mu2_slope);
    });
}

CheckResult micro_current_structure(const SuiteOptions&) {
    return timed(11, "micro-current structure", 0.0, [&](CheckResult& r) {
        experiments::Fig6Options f;
        const auto out = experiments::fig6(f);
        const auto& h = out.table.header;
        auto col = [&h](const char* name) {
            return static_cast<std::size_t>(std::find(h.begin(), h.end(), name) - h.begin());
        };
        double structure = 0.0, vanish = 0.0;
        const std::size_t n_t = static_cast<std::size_t>(f.n_t);
        for (std::size_t i = 0; i < out.table.rows.size(); ++i) {
            const auto& row = out.table.rows[i];
            for (const char* c : {"sb_max_real_offdiag", "b1b2_max_imag", "local_offdiag_residual"})
                structure = std::max(structure, std::get<double>(row[col(c)]));
            if (i % n_t == n_t - 1)
                for (const char* c : {"d_b1b2_coherence", "d_im_sb_upper", "d_im_sb_lower", "J_c0"})
                    vanish = std::max(vanish, std::abs(std::get<double>(row[col(c)])));
        }
        r.residual = std::max(structure, vanish);
        r.tolerance = 1e-12;
        r.passed = structure < 1e-12 && vanish < 1e-12;
        r.detail = "max structural residual " + num(structure) + ", currents at 2 sqrt2 J tau = pi: " + num(vanish);
    });
}

CheckResult collectivity(const SuiteOptions&) {
    return timed(12, "collectivity optimization", 0.0, [&](CheckResult& r) {
        std::vector<double> jt;
        for (int i = 1; i <= 10; ++i) jt.push_back(1e-3 * i);
        const auto f = experiments::collectivity_fit(experiments::figure_defaults(), jt);
        const double lead = std::abs(f.leading_ratio - 1.0);
        const double ratio = std::abs(f.sequential_ratio / 0.25 - 1.0);
        r.residual = std::max(lead, ratio);
        r.tolerance = 0.01;
        r.passed = lead < 0.01 && ratio < 0.01;
        r.detail = "fitted / 8 (J tau)^2 scaling " + num(f.leading_ratio) + ", sequential/collective " +
                   num(f.sequential_ratio);
    });
}

CheckResult fokker_planck(const SuiteOptions& o) {
    return timed(13, "Fokker-Planck consistency", 0.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 13));
        double km = 0.0, relax = 0.0, moment = 0.0;
        for (int i = 0; i < 50; ++i) {
            BathParams b = random_bath(rng, true);
            if (i == 0) b.coherence = 0.0;
            if (i == 1) b.coherence = coherence_bounds(b.kind, b.beta_b, b.qubit).upper;
            const auto rep = fpcheck::moment_consistency_check(b);
            km = std::max({km, rep.km_residual_excited, rep.km_residual_ground, rep.rate_identity_residual});
            relax = std::max(relax, rep.relaxation_residual);
            moment = std::max({moment, rep.drift_residual, rep.first_moment_residual});
        }
        r.residual = std::max({km, relax, moment});
        r.tolerance = 1e-12;
        r.passed = km < 1e-12 && relax < 1e-12 && moment < 1e-10;
        r.detail = "Kramers-Moyal residual " + num(km) + ", relaxation-rate residual " + num(relax) +
                   ", first-moment residual " + num(moment);
    });
}

CheckResult measures_suite(const SuiteOptions& o) {
    return timed(14, "correlation measures", 0.0, [&](CheckResult& r) {
        BathParams e = experiments::figure_defaults();
        e.kind = ProjectileKind::Entangled;
        e.coherence = coherence_bounds(e.kind, e.beta_b, e.qubit).upper;
        const double eof = measures::entanglement_of_formation(projectile_state(e), measures::LogUnit::Bits);
        BathParams c = e;
        c.kind = ProjectileKind::Classical;
        c.coherence = 0.0;
        const double discord_c = measures::quantum_discord(projectile_state(c)).value;

        BathParams d = experiments::figure_defaults();
        const double lmax = coherence_bounds(d.kind, d.beta_b, d.qubit).upper;
        const auto chi = config::linspace(-1.0, 1.0, o.discord_grid);
        std::vector<double> discord(chi.size());
        parallel::parallel_for(
            chi.size(),
            [&](std::size_t i) {
                BathParams x = d;
                x.coherence = chi[i] * lmax;
                discord[i] = measures::quantum_discord(projectile_state(x)).value;
            },
            o.threads);
        bool monotone = true;
        const std::size_t mid = chi.size() / 2;
        for (std::size_t i = 0; i + 1 < chi.size(); ++i) {
            if (i >= mid && discord[i + 1] < discord[i] - 1e-10) monotone = false;
            if (i < mid && discord[i + 1] > discord[i] + 1e-10) monotone = false;
        }
        r.residual = std::abs(eof - 0.527);
        r.tolerance = 1e-3;
        r.passed = r.residual <= 1e-3 && std::abs(discord_c) < 1e-10 && monotone && discord[mid] < 1e-10 &&
                   discord.front() > 0.0;
        r.detail = "EoF " + num(eof) + " bits, discord(rho_C) " + num(discord_c) +
                   (monotone ? ", discord monotone in |lambda|" : ", discord not monotone");
    });
}

std::vector<CheckResult> acceptance_suite(const SuiteOptions& o) {
    return {analytic_vs_ode(o),    stochastic_oracle(o),   steady_temperature(o), heat_flow_inhibition(o),
            anomalous_current(o),  onsager_reciprocity(o), second_law(o),         two_bath_first_law(o),
            mu_invariance(o),      four_qubit_block(o),    micro_current_structure(o), collectivity(o),
            fokker_planck(o),      measures_suite(o)};
}

std::vector<CheckResult> invariant_suite(const SuiteOptions& o) {
    auto results = acceptance_suite(o);
    int id = 100;

    results.push_back(timed(++id, "heat current equals tr[H_S L(rho)]", 0.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 101));
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const BathParams b = random_bath(rng, false);
            const double beta0 = rng.uniform(0.3, 4.0);
            const double t = rng.uniform(0.0, 50.0);
            const Matrix rho = dynamics::analytic_state(t, beta0, b).matrix();
            const double exact = (b.qubit.hamiltonian() * dynamics::generator_apply(rho, b)).trace().real();
            worst = std::max(worst, std::abs(exact - thermo::heat_current(t, beta0, b)));
        }
        r.residual = worst;
        r.tolerance = 1e-12;
        r.passed = worst < 1e-12;
        r.detail = "200 draws";
    }));

    results.push_back(timed(++id, "opposite heat and coherence currents at equal temperature", 0.0,
                            [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 102));
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            const BathParams b = random_bath(rng, true);
            const double jh = thermo::heat_current(0.0, b.beta_b, b);
            const double jc = thermo::coherence_current(0.0, b.beta_b, b);
            if (jh != 0.0 && jc != 0.0 && jh * jc > 0.0) ++bad;
        }
        r.residual = bad;
        r.passed = bad == 0;
        r.detail = std::to_string(bad) + " same-sign pairs in 200 draws";
    }));

    results.push_back(timed(++id, "collision maps preserve density matrices", 0.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 103));
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const BathParams b = random_bath(rng, false, 0.05, 3.0);
            const auto u = collision::cached_unitary(b.scenario, b.coupling, b.tau);
            const Matrix out = collision::collide(thermal_qubit(rng.uniform(0.3, 4.0), b.qubit).matrix(),
                                                  projectile_state(b).matrix(), u->matrix);
            const auto rep = qmath::validate_density_matrix(out, 1e-12);
            worst = std::max({worst, rep.trace_deviation, rep.hermiticity_deviation, -rep.min_eigenvalue});
        }
        r.residual = worst;
        r.tolerance = 1e-12;
        r.passed = worst < 1e-12;
        r.detail = "100 draws";
    }));

    results.push_back(timed(++id, "out-of-bound coherence rejected by config", 0.0, [&](CheckResult& r) {
        auto doc = config::Document::parse("experiment = \"fig4\"\n[bath]\nkind = \"discordant\"\ncoherence = 0.5\n");
        try {
            config::bath_from(doc, "bath", experiments::figure_defaults());
            r.detail = "lambda = 0.5 was accepted";
        } catch (const config::ConfigError& e) {
            r.passed = true;
            r.detail = e.what();
        }
    }));

    results.push_back(timed(++id, "reversed sequential order gives the same populations", 0.0, [&](CheckResult& r) {
        Rng rng(parallel::split_seed(o.seed, 105));
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            BathParams b = random_bath(rng, false);
            const auto a = collision::sequential_unitary(b.coupling, b.tau, collision::SequentialOrder::AsWritten);
            const auto rv = collision::sequential_unitary(b.coupling, b.tau, collision::SequentialOrder::Reversed);
            const Matrix rho = thermal_qubit(rng.uniform(0.3, 4.0), b.qubit).matrix();
            const Matrix x = collision::collide(rho, projectile_state(b).matrix(), a.matrix);
            const Matrix y = collision::collide(rho, projectile_state(b).matrix(), rv.matrix);
            worst = std::max(worst, std::abs(x(1, 1) - y(1, 1)));
        }
        r.residual = worst;
        r.tolerance = 1e-12;
        r.passed = worst < 1e-12;
        r.detail = "50 draws";
    }));
    return results;
}

SuiteOptions read_suite_options(const config::RunConfig& rc) {
    SuiteOptions o;
    o.seed = rc.seed;
    o.ode_draws = rc.doc.integer("checks", "ode_draws", o.ode_draws);
    o.stochastic_configs = rc.doc.integer("checks", "stochastic_configs", o.stochastic_configs);
    o.n_traj = rc.doc.integer("checks", "n_traj", o.n_traj);
    o.inhibition_draws = rc.doc.integer("checks", "inhibition_draws", o.inhibition_draws);
    o.second_law_samples = rc.doc.integer("checks", "second_law_samples", o.second_law_samples);
    o.mu_invariance_draws = rc.doc.integer("checks", "mu_invariance_draws", o.mu_invariance_draws);
    o.discord_grid = rc.doc.integer("checks", "discord_grid", o.discord_grid);
    for (int v : {o.ode_draws, o.stochastic_configs, o.n_traj, o.inhibition_draws, o.second_law_samples,
                  o.mu_invariance_draws})
        if (v < 1) throw config::ConfigError("checks counts must be at least 1");
    if (o.discord_grid < 3 || o.discord_grid % 2 == 0)
        throw config::ConfigError("checks.discord_grid must be odd and at least 3");
    return o;
}

std::string json_report(const std::vector<CheckResult>& results, std::uint64_t seed) {
    nlohmann::ordered_json doc;
    doc["seed"] = seed;
    bool all = true;
    auto& arr = doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"residual", r.residual},
                       {"tolerance", r.tolerance},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
    }
    doc["passed"] = all;
    return doc.dump(2);
}

} // namespace qrayleigh::checks
