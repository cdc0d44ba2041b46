#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pidim/dimension.hpp"
#include "pidim/errors.hpp"
#include "pidim/io.hpp"
#include "pidim/lumped_chain.hpp"
#include "pidim/multiscale.hpp"
#include "pidim/params.hpp"
#include "pidim/rng.hpp"
#include "pidim/simulate.hpp"
#include "pidim/spectrum.hpp"
#include "pidim/verify.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitNoConvergence = 4;

constexpr std::int64_t kDirectSolverLimit = 2000;

struct CommonOpts {
    std::int64_t alpha = 2;
    std::int64_t beta = 1;
    std::string p_text = "1/2";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--alpha", opts.alpha, "integer scale factor (>= 2)")->required();
    cmd->add_option("--beta", opts.beta, "integer translation (>= 1)");
    cmd->add_option("--p", opts.p_text, "translation probability; decimals or \"a/b\"")
        ->required();
}

pidim::IfsParams params_from(const CommonOpts& opts) {
    return pidim::validate_params(opts.alpha, opts.beta,
                                  pidim::parse_probability(opts.p_text));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
}

// Solves with the direct eliminator for modest truncations, power iteration
// beyond; warm starts are handled inside xi_converged for the doubling path.
pidim::StationaryVector solve_fixed_n(const pidim::TruncatedChain& chain, double tol) {
    if (chain.n_states <= kDirectSolverLimit) return pidim::solve_stationary_exact(chain);
    return pidim::solve_stationary(chain, tol, 1000000);
}

struct XiRun {
    pidim::XiVector xi;
    std::int64_t n_used = 0;
    double residual = 0.0;
    pidim::StationaryVector stationary;
};

// ξ always comes from the beta = 1 chain; systems with beta = alpha^t share
// the same digit-frequency vector.
XiRun run_xi(const pidim::IfsParams& params, std::int64_t n, double tol) {
    pidim::IfsParams unit = params;
    unit.beta = 1;
    XiRun out;
    if (n > 0) {
        const auto chain = pidim::build_truncated_chain(unit, n);
        out.stationary = solve_fixed_n(chain, tol);
        out.xi = pidim::xi_from_stationary(out.stationary, unit.alpha);
        out.n_used = n;
    } else {
        auto converged = pidim::xi_converged(unit, tol);
        out.xi = std::move(converged.xi);
        out.n_used = converged.n_used;
        out.stationary = std::move(converged.stationary);
    }
    out.residual = out.stationary.residual;
    return out;
}

int cmd_xi(const CommonOpts& common, std::int64_t n, double tol, const std::string& out_path) {
    const auto params = params_from(common);
    if (params.beta != 1) {
        throw pidim::BetaNotOne("the xi subcommand works on the beta = 1 chain");
    }
    const XiRun run = run_xi(params, n, tol);
    auto meta = pidim::base_metadata("xi", params);
    meta.push_back({"n", std::to_string(run.n_used)});
    meta.push_back({"tol", pidim::fmt17(tol)});
    emit(pidim::xi_json(meta, params, run.n_used, run.residual, run.xi.xi), out_path);
    return 0;
}

int cmd_bounds(const CommonOpts& common, std::int64_t n, double tol,
               const std::string& out_path) {
    const auto params = params_from(common);
    const auto applicability = pidim::check_applicability(params);
    if (!applicability.t_power.has_value()) {
        throw pidim::HypothesisNotMet(
            "beta = " + std::to_string(params.beta) + " is not a power of alpha = " +
            std::to_string(params.alpha) +
            "; the digit-frequency method does not transfer");
    }
    const XiRun run = run_xi(params, n, tol);
    const auto bounds = pidim::bounds_from_xi(run.xi, params, applicability);
    if (!applicability.lower_and_spectrum_ok) {
        std::cerr << "note: p > 1/2, so only the upper and naive bounds are justified;"
                  << " lower/packing fields are null\n";
    }
    auto meta = pidim::base_metadata("bounds", params);
    meta.push_back({"n", std::to_string(run.n_used)});
    meta.push_back({"tol", pidim::fmt17(tol)});
    emit(pidim::bounds_json(meta, params, run.n_used, run.residual, run.xi.xi, bounds),
         out_path);
    return 0;
}

int cmd_spectrum(const CommonOpts& common, std::int64_t grid, double clamp_max,
                 const std::string& out_path) {
    const auto params = params_from(common);
    const auto curve =
        pidim::spectrum_lower_bounds(params, pidim::check_applicability(params), grid,
                                     clamp_max);
    auto meta = pidim::base_metadata("spectrum", params);
    meta.push_back({"grid", std::to_string(grid)});
    meta.push_back({"clamp_max", pidim::fmt17(clamp_max)});
    std::ostringstream text;
    pidim::write_spectrum_csv(text, meta, curve);
    emit(text.str(), out_path);
    return 0;
}

int cmd_refine(const CommonOpts& common, std::int64_t n, std::int64_t levels, double tol,
               const std::string& out_path) {
    const auto params = params_from(common);
    if (params.beta != 1) {
        throw pidim::BetaNotOne("mass grids are computed on the beta = 1 chain");
    }
    const auto chain = pidim::build_truncated_chain(params, n);
    const auto sv = solve_fixed_n(chain, tol);
    std::vector<pidim::MassGrid> grids{pidim::base_grid_from_stationary(sv, params)};
    for (std::int64_t k = 1; k <= levels; ++k) {
        grids.push_back(pidim::refine_grid(grids.back()));
    }
    auto meta = pidim::base_metadata("refine", params);
    meta.push_back({"n", std::to_string(n)});
    meta.push_back({"levels", std::to_string(levels)});
    std::ostringstream text;
    pidim::write_mass_grid_csv(text, meta, grids);
    emit(text.str(), out_path);
    return 0;
}

int cmd_simulate(const CommonOpts& common, const pidim::SimConfig& cfg,
                 const std::string& mode, std::int64_t bins, const std::string& out_prefix) {
    const auto params = params_from(common);
    auto meta = pidim::base_metadata("simulate", params);
    meta.push_back({"generator", std::string(pidim::kGeneratorName) + " " +
                                     pidim::kGeneratorVersion});
    meta.push_back({"seed", std::to_string(cfg.seed)});
    meta.push_back({"steps", std::to_string(cfg.steps)});
    meta.push_back({"burn_in", std::to_string(cfg.burn_in)});

    const bool digits = mode == "digits" || mode == "both";
    const bool trajectory = mode == "trajectory" || mode == "both";
    if (!digits && !trajectory) {
        throw CLI::ValidationError("--mode must be digits, trajectory, or both");
    }

    if (digits) {
        const auto est = pidim::simulate_lumped_digits(params, cfg);
        emit(pidim::digit_frequency_json(meta, params, est), out_prefix + ".digits.json");
    }
    if (trajectory) {
        auto traj_meta = meta;
        traj_meta.push_back({"record_every", std::to_string(cfg.record_every)});
        traj_meta.push_back({"bins", std::to_string(bins)});
        const auto stats = pidim::simulate_trajectory(params, cfg);
        const auto tables = pidim::empirical_distribution_export(stats, bins);
        std::ostringstream hist;
        pidim::write_histogram_csv(hist, traj_meta, tables);
        emit(hist.str(), out_prefix + ".hist.csv");
        std::ostringstream cdf;
        pidim::write_cdf_csv(cdf, traj_meta, tables);
        emit(cdf.str(), out_prefix + ".cdf.csv");
    }
    std::cerr << "simulate: wrote " << out_prefix << ".* (mode " << mode << ")\n";
    return 0;
}

int cmd_verify(std::uint64_t seed, const std::string& out_path) {
    const auto results = pidim::run_verification(seed);
    const std::string table = format_verification_table(results);
    std::cout << table;
    if (!out_path.empty()) emit(table, out_path);
    return pidim::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimension bounds for the stationary distribution of the "
                 "translate-or-contract walk x -> x + beta / x -> x / alpha"};
    app.require_subcommand(1);

    CommonOpts xi_opts;
    std::int64_t xi_n = 0;
    double xi_tol = 1e-8;
    std::string xi_out;
    auto* xi_cmd = app.add_subcommand("xi", "digit-frequency vector of the truncated chain");
    add_common(xi_cmd, xi_opts);
    xi_cmd->add_option("--n", xi_n, "truncation size (0 = grow until xi settles)");
    xi_cmd->add_option("--tol", xi_tol, "convergence tolerance");
    xi_cmd->add_option("--out", xi_out, "output file (default stdout)");

    CommonOpts bounds_opts;
    std::int64_t bounds_n = 0;
    double bounds_tol = 1e-8;
    std::string bounds_out;
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form dimension bounds");
    add_common(bounds_cmd, bounds_opts);
    bounds_cmd->add_option("--n", bounds_n, "truncation size (0 = grow until xi settles)");
    bounds_cmd->add_option("--tol", bounds_tol, "convergence tolerance");
    bounds_cmd->add_option("--out", bounds_out, "output file (default stdout)");

    CommonOpts spectrum_opts;
    std::int64_t spectrum_grid = 512;
    double clamp_max = 1.0;
    std::string spectrum_out;
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "multifractal-spectrum lower-bound curve");
    add_common(spectrum_cmd, spectrum_opts);
    spectrum_cmd->add_option("--grid", spectrum_grid, "number of t grid points");
    spectrum_cmd->add_option("--clamp-max", clamp_max, "inverse-line clamp (default 1)");
    spectrum_cmd->add_option("--out", spectrum_out, "output file (default stdout)");

    CommonOpts refine_opts;
    std::int64_t refine_n = 400;
    std::int64_t refine_levels = 3;
    double refine_tol = 1e-12;
    std::string refine_out;
    auto* refine_cmd = app.add_subcommand("refine", "interval-mass grids by level");
    add_common(refine_cmd, refine_opts);
    refine_cmd->add_option("--n", refine_n, "truncation size for the level-0 masses");
    refine_cmd->add_option("--levels", refine_levels, "refinement depth");
    refine_cmd->add_option("--tol", refine_tol, "solver tolerance (large n only)");
    refine_cmd->add_option("--out", refine_out, "output file (default stdout)");

    CommonOpts sim_opts;
    pidim::SimConfig cfg;
    std::string sim_mode = "digits";
    std::int64_t sim_bins = 500;
    std::string sim_out = "simulate_out";
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo digit and trajectory runs");
    add_common(sim_cmd, sim_opts);
    sim_cmd->add_option("--seed", cfg.seed, "generator seed");
    sim_cmd->add_option("--steps", cfg.steps, "number of steps");
    sim_cmd->add_option("--burn-in", cfg.burn_in, "steps discarded before recording");
    sim_cmd->add_option("--record-every", cfg.record_every, "trajectory thinning");
    sim_cmd->add_option("--mode", sim_mode, "digits | trajectory | both");
    sim_cmd->add_option("--bins", sim_bins, "histogram bins");
    sim_cmd->add_option("--out", sim_out, "output path prefix");

    std::uint64_t verify_seed = 20150629;
    std::string verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle cross-checks");
    verify_cmd->add_option("--seed", verify_seed, "seed for the stochastic checks");
    verify_cmd->add_option("--out", verify_out, "also write the table to a file");

    try {
        app.parse(argc, argv);
        if (xi_cmd->parsed()) return cmd_xi(xi_opts, xi_n, xi_tol, xi_out);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds_opts, bounds_n, bounds_tol, bounds_out);
        if (spectrum_cmd->parsed())
            return cmd_spectrum(spectrum_opts, spectrum_grid, clamp_max, spectrum_out);
        if (refine_cmd->parsed())
            return cmd_refine(refine_opts, refine_n, refine_levels, refine_tol, refine_out);
        if (sim_cmd->parsed()) return cmd_simulate(sim_opts, cfg, sim_mode, sim_bins, sim_out);
        if (verify_cmd->parsed()) return cmd_verify(verify_seed, verify_out);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const pidim::HypothesisNotMet& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const pidim::NoConvergence& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
