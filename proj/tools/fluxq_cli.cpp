// Command-line front end: parses a key-value config, runs one analysis
// subcommand, writes a text report and CSV files into the output directory.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fluxq/config.hpp"
#include "fluxq/coupling.hpp"
#include "fluxq/csv.hpp"
#include "fluxq/design.hpp"
#include "fluxq/eeem.hpp"
#include "fluxq/ising_ed.hpp"
#include "fluxq/ising_rg.hpp"
#include "fluxq/noise.hpp"
#include "fluxq/rf_squid.hpp"
#include "fluxq/txline.hpp"

namespace fs = std::filesystem;
using namespace fluxq;

namespace {

struct RunContext {
    std::string config_path;
    std::string out_dir;
    long seed = 0;
    int threads = 1;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + path);
    f << text;
    if (!f) throw IoError("write failed: " + path);
}

std::string fmt(double v) { return format_full(v); }

std::string energy_line(const std::string& name, double joules) {
    return name + " = " + fmt(joules) + " J (" + fmt(units::energy_J_to_ueV(joules)) + " ueV)\n";
}

Config load(const RunContext& ctx, const std::map<std::string, Dimension>& allowed) {
    return Config::parse(slurp(ctx.config_path), allowed);
}

std::string header(const RunContext& ctx, const std::string& sub, const Config& cfg) {
    std::string s = "fluxq " + sub + "\nseed = " + std::to_string(ctx.seed) + "\n";
    s += "inputs (SI):\n";
    for (const auto& [k, v] : cfg.entries())
        s += "  " + k + " = " + fmt(v.value) + (v.unit.empty() ? "" : " [" + v.unit + "]") + "\n";
    return s;
}

void run_rfsquid(const RunContext& ctx) {
    Config cfg = load(ctx, {{"L", Dimension::inductance},
                            {"C", Dimension::capacitance},
                            {"beta", Dimension::none},
                            {"phi_err", Dimension::flux}});
    cfg.require({"L", "C", "beta"});
    RfSquidParams p{cfg.get("L"), cfg.get("C"), cfg.get("beta"),
                    cfg.get_or("phi_err", 0.0)};
    p.validate();
    RfSquidEnergies en = RfSquidEnergies::from(p);
    RfSquidSpectrum sp = numerov_spectrum(p);

    std::string rep = header(ctx, "rfsquid", cfg);
    rep += energy_line("E_J", en.E_J);
    rep += energy_line("E_C", en.E_C);
    rep += energy_line("E_L", en.E_L);
    rep += "alpha = " + fmt(en.alpha) + "\n";
    rep += energy_line("delta", sp.delta);
    rep += energy_line("E_err", sp.E_err);
    rep += "delta_phi = " + fmt(sp.delta_phi) + " Wb (" +
           fmt(units::flux_Wb_to_phi0(sp.delta_phi)) + " phi0)\n";
    rep += energy_line("barrier", sp.barrier);
    rep += "delta_phi sensitivity (beta dlog) = " + fmt(delta_phi_sensitivity(p)) + "\n";
    write_text(ctx.out_dir + "/report.txt", rep);

    std::vector<CsvColumn> cols{
        {"E_J_ueV", {units::energy_J_to_ueV(en.E_J)}},
        {"E_C_ueV", {units::energy_J_to_ueV(en.E_C)}},
        {"E_L_ueV", {units::energy_J_to_ueV(en.E_L)}},
        {"E_err_ueV", {units::energy_J_to_ueV(sp.E_err)}},
        {"delta_ueV", {units::energy_J_to_ueV(sp.delta)}},
        {"delta_phi_phi0", {units::flux_Wb_to_phi0(sp.delta_phi)}},
    };
    write_csv(cols, ctx.out_dir + "/summary.csv");
}

void run_rg_flow(const RunContext& ctx) {
    Config cfg = load(ctx, {{"J", Dimension::energy},
                            {"h", Dimension::energy},
                            {"eps", Dimension::energy},
                            {"steps", Dimension::none}});
    cfg.require({"J", "h"});
    IsingParams p{cfg.get("J"), cfg.get("h"), cfg.get_or("eps", 0.0)};
    int steps = cfg.get_int_or("steps", 2);
    RgTrajectory traj = rg_flow(p, steps);

    std::vector<CsvColumn> flow{{"step", {}}, {"J_J", {}}, {"h_J", {}},
                                {"eps_J", {}}, {"R", {}}};
    for (size_t i = 0; i < traj.steps.size(); ++i) {
        flow[0].values.push_back(double(i));
        flow[1].values.push_back(traj.steps[i].J);
        flow[2].values.push_back(traj.steps[i].h);
        flow[3].values.push_back(traj.steps[i].eps);
        flow[4].values.push_back(traj.steps[i].R());
    }
    write_csv(flow, ctx.out_dir + "/flow.csv");

    // two-step ratio curves over the standard R grid
    std::vector<CsvColumn> rc{{"R", {}}, {"h2_over_h", {}}, {"eps2_over_eps", {}}};
    for (int i = 1; i <= 30; ++i) {
        double R = 0.05 * i;
        TwoStepRatios t = two_step_ratios(R);
        rc[0].values.push_back(R);
        rc[1].values.push_back(t.h_ratio);
        rc[2].values.push_back(t.eps_ratio);
    }
    write_csv(rc, ctx.out_dir + "/two_step_ratios.csv");

    std::string rep = header(ctx, "rg-flow", cfg);
    const IsingParams& f = traj.steps.back();
    rep += energy_line("h_final", f.h);
    rep += energy_line("eps_final", f.eps);
    rep += "R_final = " + fmt(f.R()) + "\n";
    write_text(ctx.out_dir + "/report.txt", rep);
}

void run_ed(const RunContext& ctx) {
    Config cfg = load(ctx, {{"n", Dimension::none},
                            {"J", Dimension::energy},
                            {"h", Dimension::energy},
                            {"eps", Dimension::energy}});
    cfg.require({"n", "J", "h"});
    SpinChainSpec spec{cfg.get_int("n"), {cfg.get("J"), cfg.get("h"), cfg.get_or("eps", 0.0)}};
    spec.validate();
    ChainObservables obs = ground_state_observables(spec);
    SpectrumResult sr = diagonalize(spec);

    std::vector<CsvColumn> cols{{"level", {}}, {"energy_J", {}}};
    int keep = std::min<int>(16, int(sr.energies.size()));
    for (int i = 0; i < keep; ++i) {
        cols[0].values.push_back(double(i));
        cols[1].values.push_back(sr.energies(i));
    }
    write_csv(cols, ctx.out_dir + "/spectrum.csv");

    std::vector<CsvColumn> corr{{"distance", {}}, {"correlator", {}}};
    for (size_t i = 0; i < obs.correlators.size(); ++i) {
        corr[0].values.push_back(double(i + 1));
        corr[1].values.push_back(obs.correlators[i]);
    }
    write_csv(corr, ctx.out_dir + "/correlators.csv");

    std::string rep = header(ctx, "ed", cfg);
    rep += energy_line("gap", obs.gap);
    rep += "polarization = " + fmt(obs.polarization) + "\n";
    rep += "mean_sz = " + fmt(obs.mean_sz) + "\n";
    write_text(ctx.out_dir + "/report.txt", rep);
}

void run_coupling(const RunContext& ctx) {
    Config cfg = load(ctx, {{"N", Dimension::none},
                            {"L", Dimension::inductance},
                            {"M", Dimension::inductance},
                            {"R_target", Dimension::none},
                            {"delta", Dimension::energy},
                            {"E_err", Dimension::energy}});
    cfg.require({"N", "L", "delta"});
    int N = cfg.get_int("N");
    double L = cfg.get("L");
    double delta = cfg.get("delta");
    double M = cfg.has("M") ? cfg.get("M")
                            : required_mutual_for_R(L, N, delta, cfg.get("R_target"));
    IsingParams p = map_to_ising(L, M, N, delta, cfg.get_or("E_err", 0.0));

    CouplingModel model{N, L, M};
    model.validate();
    Eigen::MatrixXd A = tridiagonal_matrix(model);
    Eigen::MatrixXd B = tridiagonal_inverse_first_order(model);
    double inv_err = (A * B - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff();

    std::string rep = header(ctx, "coupling", cfg);
    rep += "M = " + fmt(M) + " H (M/L = " + fmt(model.ratio()) + ")\n";
    rep += energy_line("J", p.J);
    rep += energy_line("h", p.h);
    rep += energy_line("eps", p.eps);
    rep += "R = " + fmt(p.R()) + "\n";
    rep += "first-order inverse max error = " + fmt(inv_err) + "\n";
    write_text(ctx.out_dir + "/report.txt", rep);

    std::vector<CsvColumn> cols{
        {"M_H", {M}},       {"M_over_L", {model.ratio()}},
        {"J_J", {p.J}},     {"h_J", {p.h}},
        {"eps_J", {p.eps}}, {"R", {p.R()}},
        {"inverse_error", {inv_err}},
    };
    write_csv(cols, ctx.out_dir + "/summary.csv");
}

void run_txline(const RunContext& ctx) {
    Config cfg = load(ctx, {{"a", Dimension::length},
                            {"C_J", Dimension::capacitance},
                            {"l_per", Dimension::inductance_per_length},
                            {"c_per", Dimension::capacitance_per_length},
                            {"c_preset", Dimension::none},
                            {"l_preset", Dimension::none}});
    cfg.require({"a", "C_J"});
    double c_per = cfg.has("c_per") ? cfg.get("c_per") : 0.0;
    if (c_per == 0.0) {
        std::string pr = cfg.get_string_or("c_preset", "silicon");
        if (pr == "silicon") c_per = presets::c_per_silicon;
        else if (pr == "etched") c_per = presets::c_per_etched;
        else throw RangeError("c_preset must be silicon or etched");
    }
    double l_per = cfg.has("l_per") ? cfg.get("l_per") : 0.0;
    if (l_per == 0.0) {
        std::string pr = cfg.get_string_or("l_preset", "coax");
        if (pr == "coax") l_per = presets::l_per_coax;
        else if (pr == "open_loop") l_per = presets::l_per_open_loop;
        else throw RangeError("l_preset must be coax or open_loop");
    }
    TxLineSpec spec{cfg.get("a"), l_per, c_per, cfg.get("C_J")};
    double C_eff = effective_capacitance(spec);
    double L_comp = companion_inductance(spec);
    PhotonGaps g = photon_gap(spec);

    std::string rep = header(ctx, "txline", cfg);
    rep += "C_eff = " + fmt(C_eff) + " F (" + fmt(C_eff * 1e15) + " fF)\n";
    rep += "L_line = " + fmt(L_comp) + " H (" + fmt(L_comp * 1e9) + " nH)\n";
    rep += energy_line("photon_gap_psi", g.psi_branch);
    rep += energy_line("photon_gap_xi", g.xi_branch);
    write_text(ctx.out_dir + "/report.txt", rep);

    std::vector<CsvColumn> cols{
        {"C_eff_F", {C_eff}},
        {"L_line_H", {L_comp}},
        {"photon_gap_psi_J", {g.psi_branch}},
        {"photon_gap_xi_J", {g.xi_branch}},
    };
    write_csv(cols, ctx.out_dir + "/summary.csv");
}

std::vector<NoiseSpec> noise_specs_from(const Config& cfg) {
    std::vector<NoiseSpec> specs;
    double f_L = cfg.get_or("f_L", 0.1);
    double f_H = cfg.get_or("f_H", 10e9);
    if (cfg.has("phi_n")) {
        NoiseSpec s;
        s.kind = NoiseKind::one_over_f;
        s.label = "one-over-f";
        s.phi_n = units::flux_Wb_to_phi0(cfg.get("phi_n"));
        s.exact_factors = cfg.get_or("exact_factors", 0.0) != 0.0;
        s.f_L = f_L;
        s.f_H = f_H;
        specs.push_back(s);
    }
    if (cfg.has("coeff")) {
        NoiseSpec s;
        s.kind = NoiseKind::magnetometer_spectrum;
        s.label = "magnetometer";
        s.coeff = cfg.get("coeff");
        s.f_corner1 = cfg.get_or("f_corner1", 300.0);
        s.exp1 = cfg.get_or("exp1", 0.3);
        s.f_corner2 = cfg.get_or("f_corner2", 3.0);
        s.pickup_area = cfg.get_or("area", 1e-7);
        s.f_L = f_L;
        s.f_H = f_H;
        specs.push_back(s);
    }
    if (cfg.has("T")) {
        NoiseSpec s;
        s.kind = NoiseKind::thermal_inductor;
        s.label = "thermal-inductor";
        s.temperature = cfg.get("T");
        s.L_EM = cfg.get("L_EM");
        specs.push_back(s);
    }
    return specs;
}

void run_noise(const RunContext& ctx) {
    Config cfg = load(ctx, {{"phi_n", Dimension::flux},
                            {"exact_factors", Dimension::none},
                            {"coeff", Dimension::field_density},
                            {"f_corner1", Dimension::frequency},
                            {"exp1", Dimension::none},
                            {"f_corner2", Dimension::frequency},
                            {"area", Dimension::area},
                            {"T", Dimension::temperature},
                            {"L_EM", Dimension::inductance},
                            {"f_L", Dimension::frequency},
                            {"f_H", Dimension::frequency},
                            {"required", Dimension::flux}});
    std::vector<NoiseSpec> specs = noise_specs_from(cfg);
    double required = units::flux_Wb_to_phi0(cfg.get("required"));
    NoiseBudget budget = assemble_budget(specs, required);

    std::string rep = header(ctx, "noise", cfg);
    for (const auto& [label, rms] : budget.contributions)
        rep += label + " rms = " + fmt(rms) + " phi0\n";
    rep += "worst = " + fmt(budget.worst) + " phi0\n";
    rep += "required = " + fmt(budget.required_phi_err) + " phi0\n";
    rep += std::string("verdict = ") + (budget.pass ? "pass" : "fail") + "\n";
    write_text(ctx.out_dir + "/report.txt", rep);

    std::vector<CsvColumn> cols{{"entry", {}}, {"rms_phi0", {}}};
    for (size_t i = 0; i < budget.contributions.size(); ++i) {
        cols[0].values.push_back(double(i));
        cols[1].values.push_back(budget.contributions[i].second);
    }
    write_csv(cols, ctx.out_dir + "/budget.csv");
}

void run_eeem(const RunContext& ctx) {
    Config cfg = load(ctx, {{"P", Dimension::none},
                            {"s", Dimension::none},
                            {"rounds", Dimension::none}});
    cfg.require({"P", "s"});
    EeemConfig ec{cfg.get("P"), cfg.get("s")};
    ec.validate();
    int rounds = cfg.get_int_or("rounds", 1);

    JointState st = specimen_phase(interact(ec), ec.s);
    MeasurementResult ms = measure_electron(st, ElectronBasis::symmetric);
    MeasurementResult ma = measure_electron(st, ElectronBasis::antisymmetric);
    FoldedRounds fr = run_rounds(ec, rounds);

    std::string rep = header(ctx, "eeem", cfg);
    rep += "zeta = " + fmt(ec.zeta()) + "\n";
    rep += "P(symmetric) = " + fmt(ms.probability) + "\n";
    rep += "P(antisymmetric) = " + fmt(ma.probability) + "\n";
    rep += "qubit after symmetric outcome = (" + fmt(ms.qubit[0].real()) + "+" +
           fmt(ms.qubit[0].imag()) + "i, " + fmt(ms.qubit[1].real()) + "+" +
           fmt(ms.qubit[1].imag()) + "i)\n";
    rep += "joint probability over " + std::to_string(rounds) +
           " symmetric rounds = " + fmt(fr.joint_probability) + "\n";
    write_text(ctx.out_dir + "/report.txt", rep);

    std::vector<CsvColumn> cols{{"round", {}}, {"p_symmetric", {}}};
    for (size_t i = 0; i < fr.rounds.size(); ++i) {
        cols[0].values.push_back(double(i + 1));
        cols[1].values.push_back(fr.rounds[i].probability);
    }
    write_csv(cols, ctx.out_dir + "/rounds.csv");
}

std::map<std::string, Dimension> design_keys() {
    return {{"L", Dimension::inductance},
            {"C", Dimension::capacitance},
            {"beta", Dimension::none},
            {"N", Dimension::none},
            {"M", Dimension::inductance},
            {"R_target", Dimension::none},
            {"phi_err", Dimension::flux},
            {"margin", Dimension::none},
            {"T", Dimension::temperature},
            {"L_EM", Dimension::inductance},
            {"phi_n", Dimension::flux},
            {"exact_factors", Dimension::none},
            {"f_L", Dimension::frequency},
            {"f_H", Dimension::frequency}};
}

DesignReport design_from_config(const Config& cfg, double C_override = -1.0) {
    RfSquidParams dev{cfg.get("L"),
                      C_override > 0.0 ? C_override : cfg.get("C"),
                      cfg.get("beta"), cfg.get_or("phi_err", 0.0)};
    dev.validate();
    int N = cfg.get_int("N");
    double delta = numerov_spectrum(dev).delta;
    double M = cfg.has("M") ? cfg.get("M")
                            : required_mutual_for_R(dev.L, N, delta,
                                                    cfg.get_or("R_target", 0.57));
    std::vector<NoiseSpec> specs = noise_specs_from(cfg);
    return analyze(dev, N, M, dev.phi_err, cfg.get_or("margin", 10.0), specs);
}

std::string render_design(const RunContext& ctx, const Config& cfg,
                          const DesignReport& r) {
    std::string rep = header(ctx, "design", cfg);
    rep += energy_line("delta", r.spectrum.delta);
    rep += energy_line("E_err", r.spectrum.E_err);
    rep += energy_line("J", r.ising.J);
    rep += energy_line("h", r.ising.h);
    rep += energy_line("eps", r.ising.eps);
    rep += "R = " + fmt(r.R) + "\n";
    rep += "rg_steps = " + std::to_string(r.rg_steps) +
           (r.power_of_two ? "" : "  (caveat: N is not a power of two)") + "\n";
    rep += energy_line("delta_renorm", r.delta_renorm);
    rep += energy_line("eps_renorm", r.eps_renorm);
    rep += "phi_err_bound = " + fmt(r.phi_err_bound) + " phi0\n";
    rep += "reset_time = " + fmt(r.reset_time) + " s\n";
    rep += "geometry: total " + fmt(r.geometry.total_length) + " m vs limit " +
           fmt(r.geometry.coherence_length) + " m -> " +
           (r.geometry.pass ? "pass" : "fail") + "\n";
    rep += std::string("noise verdict = ") + (r.noise.pass ? "pass" : "fail") + "\n";
    // footnote: reset bound uses the Planck constant over the renormalized
    // splitting, not the transverse field.
    return rep;
}

void run_design(const RunContext& ctx) {
    Config cfg = load(ctx, design_keys());
    cfg.require({"L", "C", "beta", "N"});
    DesignReport r = design_from_config(cfg);
    write_text(ctx.out_dir + "/report.txt", render_design(ctx, cfg, r));

    std::vector<CsvColumn> cols{
        {"delta_ueV", {units::energy_J_to_ueV(r.spectrum.delta)}},
        {"delta_renorm_J", {r.delta_renorm}},
        {"R", {r.R}},
        {"phi_err_bound_phi0", {r.phi_err_bound}},
        {"reset_time_s", {r.reset_time}},
        {"total_length_m", {r.geometry.total_length}},
    };
    write_csv(cols, ctx.out_dir + "/summary.csv");
}

void run_sweep(const RunContext& ctx) {
    auto keys = design_keys();
    keys["C_from"] = Dimension::capacitance;
    keys["C_to"] = Dimension::capacitance;
    keys["points"] = Dimension::none;
    Config cfg = load(ctx, keys);
    cfg.require({"L", "beta", "N", "C_from", "C_to", "points"});
    int n = cfg.get_int("points");
    if (n < 2) throw RangeError("sweep: need points >= 2");
    double c0 = cfg.get("C_from"), c1 = cfg.get("C_to");
    if (!(c0 > 0.0) || !(c1 > c0)) throw RangeError("sweep: need 0 < C_from < C_to");

    std::vector<CsvColumn> cols{{"C_fF", {}},
                                {"delta_ueV", {}},
                                {"phi_err_bound_phi0", {}},
                                {"reset_time_s", {}}};
    for (int i = 0; i < n; ++i) {
        double C = c0 + (c1 - c0) * i / (n - 1);
        DesignReport r = design_from_config(cfg, C);
        cols[0].values.push_back(C * 1e15);
        cols[1].values.push_back(units::energy_J_to_ueV(r.spectrum.delta));
        cols[2].values.push_back(r.phi_err_bound);
        cols[3].values.push_back(r.reset_time);
    }
    write_csv(cols, ctx.out_dir + "/sweep.csv");
    write_text(ctx.out_dir + "/report.txt",
               header(ctx, "sweep", cfg) + "rows = " + std::to_string(n) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"composite flux qubit design calculator"};
    app.require_subcommand(1);

    RunContext ctx;
    const std::vector<std::pair<std::string, void (*)(const RunContext&)>> subs = {
        {"rfsquid", run_rfsquid}, {"rg-flow", run_rg_flow}, {"ed", run_ed},
        {"coupling", run_coupling}, {"txline", run_txline}, {"noise", run_noise},
        {"eeem", run_eeem}, {"design", run_design}, {"sweep", run_sweep},
    };
    for (const auto& [name, fn] : subs) {
        CLI::App* sc = app.add_subcommand(name);
        sc->add_option("--config", ctx.config_path, "config file path")->required();
        sc->add_option("--out", ctx.out_dir, "output directory")->required();
        sc->add_option("--seed", ctx.seed, "seed for randomized test data");
        sc->add_option("--threads", ctx.threads, "worker thread cap");
        auto runner = fn;
        sc->callback([&ctx, runner]() {
            fs::create_directories(ctx.out_dir);
            runner(ctx);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const fluxq::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const UnitError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const RangeError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fluxq::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
