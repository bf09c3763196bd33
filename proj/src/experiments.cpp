#include "qrayleigh/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qrayleigh/dynamics.hpp"
#include "qrayleigh/errors.hpp"
#include "qrayleigh/parallel.hpp"
#include "qrayleigh/thermo.hpp"

namespace qrayleigh::experiments {

namespace {

using config::ConfigError;
using config::linspace;
using csv::Cell;

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(int n, const char* what) {
    if (n < 1) throw ConfigError(std::string(what) + " must be at least 1");
}

void require_finite_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(std::string(what) + " must be positive");
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

// Rows computed independently per grid point, written back in grid order.
template <class F>
std::vector<std::vector<Cell>> rows_in_order(std::size_t n, F&& make_row) {
    std::vector<std::vector<Cell>> rows(n);
    parallel::parallel_for(n, [&](std::size_t i) { rows[i] = make_row(i); });
    return rows;
}

void append(csv::Table& t, std::vector<std::vector<Cell>> rows) {
    for (auto& r : rows) t.add_row(std::move(r));
}

BathParams with_chi(BathParams b, double chi) {
    b.coherence = chi * coherence_bounds(b.kind, b.beta_b, b.qubit).upper;
    return b;
}

BathParams with_jt(BathParams b, double jt) {
    b.tau = 1.0;
    b.coupling = jt;
    return b;
}

const std::vector<Scenario> kScenarios{Scenario::Sequential, Scenario::Collective};

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Slope through the origin.
double proportionality(const std::vector<double>& x, const std::vector<double>& y) {
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return sxy / sxx;
}

BathParams read_bath(const config::RunConfig& rc, const BathParams& defaults) {
    return config::bath_from(rc.doc, "bath", defaults);
}

void reject_unused(const config::RunConfig& rc) {
    const auto unused = rc.doc.unused_keys();
    if (unused.empty()) return;
    std::string msg = "unknown config keys:";
    for (const auto& k : unused) msg += " " + k;
    throw ConfigError(msg);
}

} // namespace

BathParams figure_defaults() {
    BathParams b;
    b.kind = ProjectileKind::Discordant;
    b.beta_b = 2.0;
    b.coherence = 0.0;
    b.scenario = Scenario::Collective;
    b.coupling = 0.05;
    b.tau = 1.0;
    b.rate = 1.0;
    b.qubit = QubitSpec{1.0, 2.0};
    return b;
}

Fig3Options read_fig3(const config::RunConfig& rc) {
    Fig3Options o;
    o.bath = read_bath(rc, o.bath);
    o.n_chi = rc.doc.integer("grid", "n_chi", o.n_chi);
    o.units = rc.units;
    require_positive(o.n_chi, "grid.n_chi");
    return o;
}

Fig4Options read_fig4(const config::RunConfig& rc) {
    Fig4Options o;
    o.bath = read_bath(rc, o.bath);
    o.t_max = rc.doc.number("grid", "t_max", o.t_max);
    o.n_t = rc.doc.integer("grid", "n_t", o.n_t);
    o.n_chi = rc.doc.integer("grid", "n_chi", o.n_chi);
    o.jt_max = rc.doc.number("grid", "jt_max", o.jt_max);
    o.n_jt = rc.doc.integer("grid", "n_jt", o.n_jt);
    require_finite_positive(o.t_max, "grid.t_max");
    require_finite_positive(o.jt_max, "grid.jt_max");
    require_positive(o.n_t, "grid.n_t");
    require_positive(o.n_chi, "grid.n_chi");
    require_positive(o.n_jt, "grid.n_jt");
    return o;
}

Fig5Options read_fig5(const config::RunConfig& rc) {
    Fig5Options o;
    o.bath = read_bath(rc, o.bath);
    o.beta_s0 = rc.doc.number("system", "beta_s0", o.beta_s0);
    o.t_max = rc.doc.number("grid", "t_max", o.t_max);
    o.n_t = rc.doc.integer("grid", "n_t", o.n_t);
    o.n_chi = rc.doc.integer("grid", "n_chi", o.n_chi);
    o.t_probe = rc.doc.number("grid", "t_probe", o.t_probe);
    o.jt_max = rc.doc.number("grid", "jt_max", o.jt_max);
    o.n_jt = rc.doc.integer("grid", "n_jt", o.n_jt);
    require_finite_positive(o.beta_s0, "system.beta_s0");
    require_finite_positive(o.t_max, "grid.t_max");
    require_finite_positive(o.jt_max, "grid.jt_max");
    if (!(o.t_probe >= 0.0)) throw ConfigError("grid.t_probe must be non-negative");
    require_positive(o.n_t, "grid.n_t");
    require_positive(o.n_chi, "grid.n_chi");
    require_positive(o.n_jt, "grid.n_jt");
    return o;
}

Fig6Options read_fig6(const config::RunConfig& rc) {
    Fig6Options o;
    o.coupling = rc.doc.number("collision", "coupling", o.coupling);
    o.qubit.e_g = rc.doc.number("collision", "e_g", o.qubit.e_g);
    o.qubit.e_e = rc.doc.number("collision", "e_e", o.qubit.e_e);
    o.n_t = rc.doc.integer("grid", "n_t", o.n_t);
    if (rc.doc.has("panels", "beta_b") || rc.doc.has("panels", "beta_s")) {
        const auto bb = rc.doc.numbers("panels", "beta_b", {});
        const auto bs = rc.doc.numbers("panels", "beta_s", {});
        if (bb.size() != bs.size() || bb.empty())
            throw ConfigError("panels.beta_b and panels.beta_s must be non-empty and of equal length");
        o.panels.clear();
        for (std::size_t i = 0; i < bb.size(); ++i) {
            require_finite_positive(bb[i], "panels.beta_b");
            require_finite_positive(bs[i], "panels.beta_s");
            o.panels.push_back({bb[i], bs[i]});
        }
    }
    require_finite_positive(o.coupling, "collision.coupling");
    require_positive(o.n_t, "grid.n_t");
    try {
        o.qubit.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return o;
}

Fig7Options read_fig7(const config::RunConfig& rc) {
    Fig7Options o;
    o.bath = read_bath(rc, o.bath);
    if (o.bath.kind != ProjectileKind::Entangled && o.bath.kind != ProjectileKind::Classical)
        throw ConfigError("fig7 needs an entangled or classical bath");
    o.beta_s0 = rc.doc.number("system", "beta_s0", o.beta_s0);
    o.chi = rc.doc.numbers("grid", "chi", o.chi);
    o.t_max = rc.doc.number("grid", "t_max", o.t_max);
    o.n_t = rc.doc.integer("grid", "n_t", o.n_t);
    require_finite_positive(o.beta_s0, "system.beta_s0");
    require_finite_positive(o.t_max, "grid.t_max");
    require_positive(o.n_t, "grid.n_t");
    if (o.chi.empty()) throw ConfigError("grid.chi must not be empty");
    for (double c : o.chi)
        if (!(std::abs(c) <= 1.0)) throw ConfigError("grid.chi entries must lie in [-1, 1]");
    return o;
}

OnsagerOptions read_onsager(const config::RunConfig& rc) {
    OnsagerOptions o;
    o.bath = read_bath(rc, o.bath);
    if (o.bath.normalized().kind != ProjectileKind::Discordant)
        throw ConfigError("onsager needs a discordant or product bath");
    o.beta_gap = rc.doc.numbers("grid", "beta_gap", o.beta_gap);
    o.step_beta = rc.doc.number("grid", "step_beta", o.step_beta);
    o.step_c = rc.doc.number("grid", "step_c", o.step_c);
    if (o.beta_gap.empty()) throw ConfigError("grid.beta_gap must not be empty");
    for (double b : o.beta_gap) require_finite_positive(b, "grid.beta_gap");
    require_finite_positive(o.step_beta, "grid.step_beta");
    require_finite_positive(o.step_c, "grid.step_c");
    return o;
}

SweepOptions read_sweep(const config::RunConfig& rc) {
    SweepOptions o;
    o.bath = read_bath(rc, o.bath);
    o.jt = rc.doc.numbers("grid", "jt", o.jt);
    o.fit_jt_max = rc.doc.number("grid", "fit_jt_max", o.fit_jt_max);
    for (double x : o.jt)
        if (!(x >= 0.0) || !std::isfinite(x)) throw ConfigError("grid.jt entries must be non-negative");
    require_finite_positive(o.fit_jt_max, "grid.fit_jt_max");
    return o;
}

Output fig3(const Fig3Options& o) {
    Output out;
    out.table.header = {"state", "chi", "coherence", "rel_entropy_coherence", "l1_coherence",
                        "classical_correlations", "discord", "eof"};
    const auto chi = linspace(-1.0, 1.0, o.n_chi);
    const std::vector<ProjectileKind> kinds{ProjectileKind::Discordant, ProjectileKind::Entangled};
    append(out.table, rows_in_order(kinds.size() * chi.size(), [&](std::size_t i) {
        BathParams b = o.bath;
        b.kind = kinds[i / chi.size()];
        b = with_chi(b, chi[i % chi.size()]);
        const auto rho = projectile_state(b);
        return std::vector<Cell>{to_string(b.kind),
                                 chi[i % chi.size()],
                                 b.coherence,
                                 measures::convert(measures::rel_entropy_coherence(rho), o.units),
                                 measures::l1_coherence(rho),
                                 measures::convert(measures::classical_correlations(rho).value, o.units),
                                 measures::convert(measures::quantum_discord(rho).value, o.units),
                                 measures::entanglement_of_formation(rho, o.units)};
    }));
    return out;
}

Output fig4(const Fig4Options& o) {
    Output out;
    out.table.header = {"panel", "scenario", "jt", "chi", "t", "T_S"};
    const auto chi = linspace(-1.0, 1.0, o.n_chi);
    const auto t = linspace(0.0, o.t_max, o.n_t);
    const auto jt = linspace(0.0, o.jt_max, o.n_jt);
    const double beta_s0 = o.bath.beta_b;

    const std::size_t per_time = chi.size() * t.size();
    append(out.table, rows_in_order(kScenarios.size() * per_time, [&](std::size_t i) {
        BathParams b = o.bath;
        b.scenario = kScenarios[i / per_time];
        const std::size_t k = i % per_time;
        b = with_chi(b, chi[k / t.size()]);
        const double tk = t[k % t.size()];
        const double temp = thermo::temperature_of(dynamics::analytic_state(tk, beta_s0, b), b.qubit);
        return std::vector<Cell>{"time", to_string(b.scenario), b.coupling_time(), chi[k / t.size()], tk, temp};
    }));

    const std::size_t per_steady = jt.size() * chi.size();
    append(out.table, rows_in_order(kScenarios.size() * per_steady, [&](std::size_t i) {
        BathParams b = o.bath;
        b.scenario = kScenarios[i / per_steady];
        const std::size_t k = i % per_steady;
        b = with_chi(with_jt(b, jt[k / chi.size()]), chi[k % chi.size()]);
        return std::vector<Cell>{"steady", to_string(b.scenario), jt[k / chi.size()], chi[k % chi.size()], kInf,
                                 thermo::steady_temperature(b)};
    }));
    return out;
}

Output fig5(const Fig5Options& o) {
    Output out;
    out.table.header = {"panel", "scenario", "jt", "chi", "t", "J", "J_anomalous"};
    const auto chi = linspace(-1.0, 1.0, o.n_chi);
    const auto t = linspace(0.0, o.t_max, o.n_t);
    const auto jt = linspace(0.0, o.jt_max, o.n_jt);

    auto row = [&](const char* panel, const BathParams& b, double chi_k, double tk) {
        return std::vector<Cell>{panel,
                                 to_string(b.scenario),
                                 b.coupling_time(),
                                 chi_k,
                                 tk,
                                 thermo::heat_current(tk, o.beta_s0, b),
                                 thermo::heat_current(tk, b.beta_b, b)};
    };
    const std::size_t per_time = chi.size() * t.size();
    append(out.table, rows_in_order(kScenarios.size() * per_time, [&](std::size_t i) {
        BathParams b = o.bath;
        b.scenario = kScenarios[i / per_time];
        const std::size_t k = i % per_time;
        b = with_chi(b, chi[k / t.size()]);
        return row("time", b, chi[k / t.size()], t[k % t.size()]);
    }));
    const std::size_t per_probe = jt.size() * chi.size();
    append(out.table, rows_in_order(kScenarios.size() * per_probe, [&](std::size_t i) {
        BathParams b = o.bath;
        b.scenario = kScenarios[i / per_probe];
        const std::size_t k = i % per_probe;
        b = with_chi(with_jt(b, jt[k / chi.size()]), chi[k % chi.size()]);
        return row("probe", b, chi[k % chi.size()], o.t_probe);
    }));

    // Coherence value at which the initial temperature is the steady one.
    BathParams b = o.bath;
    const auto c = dynamics::closed_form_coefficients(b);
    const auto p = gibbs_weights(b.beta_b, b.qubit);
    const double r = std::exp(-o.beta_s0 * b.qubit.gap());
    const double al = (p.excited - r * p.ground) / (r - 1.0);
    out.notes.push_back("current vanishes at alpha*lambda = " + fmt(al) + " (chi = " +
                        fmt(al / c.alpha / coherence_bounds(b.kind, b.beta_b, b.qubit).upper) + " at J tau = " +
                        fmt(b.coupling_time()) + ")");
    return out;
}

Output fig6(const Fig6Options& o) {
    Output out;
    out.table.header = {"beta_b", "beta_s", "t", "d_b1b2_coherence", "d_im_sb_upper", "d_im_sb_lower", "J_c0",
                        "sb_max_real_offdiag", "b1b2_max_imag", "local_offdiag_residual"};
    const double t_end = std::numbers::pi / (2.0 * std::numbers::sqrt2 * o.coupling);
    const auto t = linspace(0.0, t_end, o.n_t);

    auto panel_rows = rows_in_order(o.panels.size(), [&](std::size_t i) {
        const auto& panel = o.panels[i];
        BathParams b = figure_defaults();
        b.qubit = o.qubit;
        b.beta_b = panel.beta_b;
        b.coupling = o.coupling;
        b = with_chi(b, 1.0);
        const auto snaps = dynamics::intra_collision_snapshots(thermal_qubit(panel.beta_s, b.qubit),
                                                               projectile_state(b), Scenario::Collective,
                                                               o.coupling, t);
        std::vector<Cell> flat;
        for (const auto& s : snaps) {
            BathParams timed = b;
            timed.tau = s.t;
            flat.insert(flat.end(),
                        {panel.beta_b, panel.beta_s, s.t,
                         s.b1b2_exchange_coherence - snaps.front().b1b2_exchange_coherence,
                         s.sb1_upper.imag() - snaps.front().sb1_upper.imag(),
                         s.sb1_lower.imag() - snaps.front().sb1_lower.imag(),
                         thermo::coherence_current(0.0, panel.beta_s, timed), s.sb_max_real_offdiag,
                         s.b1b2_max_imag, s.local_offdiag_residual});
        }
        return flat;
    });
    const std::size_t width = out.table.header.size();
    for (auto& flat : panel_rows)
        for (std::size_t k = 0; k < flat.size(); k += width)
            out.table.add_row(std::vector<Cell>(flat.begin() + static_cast<std::ptrdiff_t>(k),
                                                flat.begin() + static_cast<std::ptrdiff_t>(k + width)));
    return out;
}

MuScaling mu_scaling(const BathParams& entangled, double beta_s0, const std::vector<double>& chi) {
    const double gap = entangled.qubit.gap();
    const auto q = gibbs_weights(beta_s0, entangled.qubit);
    auto evaluate = [&](double c) {
        const BathParams b = with_chi(entangled, c);
        const auto r = dynamics::extended_block_rates(b);
        const double t_inf = gap / std::log(r.emission / r.absorption);
        const double j0 = gap * (q.ground * r.absorption - q.excited * r.emission);
        return std::pair{t_inf, j0};
    };
    std::vector<std::pair<double, double>> vals(chi.size() + 1);
    parallel::parallel_for(vals.size(), [&](std::size_t i) { vals[i] = evaluate(i == 0 ? 0.0 : chi[i - 1]); });

    MuScaling s;
    std::vector<double> lx, lt, lj, mu2;
    const double mu_max = coherence_bounds(entangled.kind, entangled.beta_b, entangled.qubit).upper;
    for (std::size_t i = 0; i < chi.size(); ++i) {
        const double mu = chi[i] * mu_max;
        s.mu.push_back(mu);
        s.temperature_shift.push_back(vals[i + 1].first - vals[0].first);
        s.current_shift.push_back(vals[i + 1].second - vals[0].second);
        mu2.push_back(mu * mu);
        lx.push_back(std::log(std::abs(mu)));
        lt.push_back(std::log(std::abs(s.temperature_shift.back())));
        lj.push_back(std::log(std::abs(s.current_shift.back())));
    }
    if (chi.size() >= 2) {
        s.temperature_exponent = least_squares_slope(lx, lt);
        s.current_exponent = least_squares_slope(lx, lj);
    }
    s.temperature_mu2_slope = proportionality(mu2, s.temperature_shift);
    return s;
}

Output fig7(const Fig7Options& o) {
    Output out;
    out.table.header = {"chi", "mu", "t", "T_S", "J"};
    const auto t = linspace(0.0, o.t_max, o.n_t);
    const double gap = o.bath.qubit.gap();
    const auto q = gibbs_weights(o.beta_s0, o.bath.qubit);

    auto blocks = rows_in_order(o.chi.size(), [&](std::size_t i) {
        const BathParams b = with_chi(o.bath, o.chi[i]);
        const auto r = dynamics::extended_block_rates(b);
        const double total = r.absorption + r.emission;
        const double e_inf = r.absorption / total;
        std::vector<Cell> flat;
        auto push = [&](double tk, double excited) {
            const double ground = 1.0 - excited;
            flat.insert(flat.end(), {o.chi[i], b.coherence, tk, gap / std::log(ground / excited),
                                     gap * (ground * r.absorption - excited * r.emission)});
        };
        for (double tk : t) push(tk, e_inf + (q.excited - e_inf) * std::exp(-total * tk));
        flat.insert(flat.end(), {o.chi[i], b.coherence, kInf, gap / std::log((1.0 - e_inf) / e_inf), 0.0});
        return flat;
    });
    for (auto& flat : blocks)
        for (std::size_t k = 0; k < flat.size(); k += 5)
            out.table.add_row(std::vector<Cell>(flat.begin() + static_cast<std::ptrdiff_t>(k),
                                                flat.begin() + static_cast<std::ptrdiff_t>(k + 5)));

    std::vector<double> small;
    for (double c : o.chi)
        if (c != 0.0) small.push_back(c);
    if (small.size() >= 2) {
        const auto s = mu_scaling(o.bath, o.beta_s0, small);
        out.notes.push_back("steady temperature shift vs mu: log-log exponent " + fmt(s.temperature_exponent) +
                            ", slope vs mu^2 " + fmt(s.temperature_mu2_slope));
        out.notes.push_back("t = 0 heat current shift vs mu: log-log exponent " + fmt(s.current_exponent));
    }
    return out;
}

Output onsager(const OnsagerOptions& o) {
    Output out;
    out.table.header = {"scenario", "beta_gap", "beta_b", "jt", "L", "L_hh", "L_hc", "L_ch", "L_cc",
                        "reciprocity", "max_rel_error", "nonlinearity", "nonlinear_regime"};
    const std::size_t n = kScenarios.size() * o.beta_gap.size();
    append(out.table, rows_in_order(n, [&](std::size_t i) {
        BathParams b = o.bath;
        b.scenario = kScenarios[i / o.beta_gap.size()];
        b.beta_b = o.beta_gap[i % o.beta_gap.size()] / b.qubit.gap();
        b = b.normalized();
        if (!coherence_bounds(b.kind, b.beta_b, b.qubit).contains(b.coherence))
            throw DomainError("bath coherence outside the bound at beta_b = " + fmt(b.beta_b));
        const auto closed = thermo::onsager_coefficients(b, b.beta_b);
        const auto num = thermo::extract_onsager_numeric(b, o.step_beta * b.beta_b, o.step_c);
        const auto& m = num.matrix;
        const double rel = std::max({std::abs(m.l_hh / closed.l_hh - 1.0), std::abs(m.l_hc / closed.l_hc - 1.0),
                                     std::abs(m.l_ch / closed.l_ch - 1.0), std::abs(m.l_cc / closed.l_cc - 1.0)});
        return std::vector<Cell>{to_string(b.scenario),
                                 o.beta_gap[i % o.beta_gap.size()],
                                 b.beta_b,
                                 b.coupling_time(),
                                 closed.l_hh,
                                 m.l_hh,
                                 m.l_hc,
                                 m.l_ch,
                                 m.l_cc,
                                 std::abs(m.l_hc - m.l_ch) / std::abs(m.l_hc),
                                 rel,
                                 num.nonlinearity,
                                 static_cast<long long>(num.nonlinear_regime)};
    }));
    for (const auto& row : out.table.rows)
        if (std::get<long long>(row.back()))
            out.notes.push_back("warning: nonlinear response at " + std::get<std::string>(row[0]) +
                                " beta*dE = " + fmt(std::get<double>(row[1])) +
                                " (residual " + fmt(std::get<double>(row[11])) + ")");
    return out;
}

CollectivityFit collectivity_fit(const BathParams& bath, const std::vector<double>& jt) {
    std::vector<double> x, y;
    const double gap = bath.qubit.gap();
    for (double v : jt) {
        BathParams b = with_jt(bath, v);
        b.scenario = Scenario::Collective;
        x.push_back(8.0 * v * v * gap * gap * b.rate / 4.0);
        y.push_back(thermo::onsager_coefficients(b, b.beta_b).l_hh);
    }
    CollectivityFit f;
    f.leading_ratio = proportionality(x, y);
    const double smallest = *std::min_element(jt.begin(), jt.end());
    BathParams seq = with_jt(bath, smallest), col = with_jt(bath, smallest);
    seq.scenario = Scenario::Sequential;
    col.scenario = Scenario::Collective;
    f.sequential_ratio = thermo::onsager_coefficients(seq, seq.beta_b).l_hh /
                         thermo::onsager_coefficients(col, col.beta_b).l_hh;
    return f;
}

Output sweep(const SweepOptions& o) {
    Output out;
    out.table.header = {"scenario", "jt", "L", "L_two_bath", "ratio_8j2t2", "sequential_over_collective"};
    std::vector<double> jt = o.jt;
    if (jt.empty()) {
        for (int i = 0; i <= 10; ++i) jt.push_back(1e-3 * std::pow(10.0, i / 10.0));
        for (int i = 1; i <= 100; ++i) jt.push_back(0.0314159265358979 * i);
        jt.push_back(std::numbers::pi / (2.0 * std::numbers::sqrt2));
        std::sort(jt.begin(), jt.end());
    }
    const double gap = o.bath.qubit.gap();
    auto coefficient = [&](Scenario s, double v) {
        BathParams b = with_jt(o.bath, v);
        b.scenario = s;
        return thermo::onsager_coefficients(b, b.beta_b).l_hh;
    };
    append(out.table, rows_in_order(kScenarios.size() * jt.size(), [&](std::size_t i) {
        const Scenario s = kScenarios[i / jt.size()];
        const double v = jt[i % jt.size()];
        const double l = coefficient(s, v);
        const double scale = 8.0 * v * v * gap * gap * o.bath.rate / 4.0;
        const double col = coefficient(Scenario::Collective, v);
        return std::vector<Cell>{to_string(s), v, l, l / 2.0, scale > 0.0 ? l / scale : 0.0,
                                 col != 0.0 ? coefficient(Scenario::Sequential, v) / col : 0.0};
    }));

    std::vector<double> small;
    for (double v : jt)
        if (v > 0.0 && v <= o.fit_jt_max) small.push_back(v);
    if (!small.empty()) {
        const auto f = collectivity_fit(o.bath, small);
        out.notes.push_back("collective small-J tau fit: L / (8 (J tau)^2 dE^2 p / 4) = " + fmt(f.leading_ratio));
        out.notes.push_back("sequential / collective at J tau = " +
                            fmt(*std::min_element(small.begin(), small.end())) + ": " + fmt(f.sequential_ratio));
    }
    return out;
}

Output run(const config::RunConfig& rc) {
    const std::string& e = rc.experiment;
    auto go = [&](auto read, auto exec) {
        const auto options = read(rc);
        reject_unused(rc);
        return exec(options);
    };
    if (e == "fig3") return go(read_fig3, fig3);
    if (e == "fig4") return go(read_fig4, fig4);
    if (e == "fig5") return go(read_fig5, fig5);
    if (e == "fig6") return go(read_fig6, fig6);
    if (e == "fig7") return go(read_fig7, fig7);
    if (e == "onsager") return go(read_onsager, onsager);
    if (e == "sweep") return go(read_sweep, sweep);
    throw ConfigError("experiment '" + e + "' has no dataset");
}

} // namespace qrayleigh::experiments
