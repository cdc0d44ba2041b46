#include "pidim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "pidim/digits.hpp"
#include "pidim/dimension.hpp"
#include "pidim/lumped_chain.hpp"
#include "pidim/multiscale.hpp"
#include "pidim/params.hpp"
#include "pidim/simulate.hpp"
#include "pidim/spectrum.hpp"

namespace pidim {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

CheckResult check_small_chain_exact() {
    const IfsParams params = validate_params(2, 1, 1.0 / 3.0);
    const auto sv = solve_stationary_exact(build_truncated_chain(params, 5));
    const double expected[5] = {32.0 / 57.0, 16.0 / 57.0, 6.0 / 57.0, 2.0 / 57.0, 1.0 / 57.0};
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        worst = std::max(worst, std::abs(sv.probabilities[static_cast<std::size_t>(i)] -
                                         expected[i]));
    }
    return {"five_state_exact_solution", worst < 1e-13, "sup error " + num(worst)};
}

CheckResult check_small_chain_matrix() {
    const double p = 1.0 / 3.0;
    const double q = 1.0 - p;
    const auto dense = build_truncated_chain(validate_params(2, 1, p), 5).dense();
    const double expected[5][5] = {{q, p, 0, 0, 0},
                                   {q, 0, p, 0, 0},
                                   {0, q, 0, p, 0},
                                   {0, q, 0, 0, p},
                                   {0, 0, q, 0, p}};
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            ok = ok && dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                           expected[i][j];
        }
    }
    return {"five_state_matrix_form", ok, ok ? "entrywise equal" : "mismatch"};
}

CheckResult check_power_vs_exact() {
    const IfsParams params = validate_params(2, 1, 1.0 / 3.0);
    const auto chain = build_truncated_chain(params, 257);
    const auto direct = solve_stationary_exact(chain);
    const auto iterative = solve_stationary(chain, 1e-13, 1000000);
    double worst = 0.0;
    for (std::size_t i = 0; i < direct.probabilities.size(); ++i) {
        worst = std::max(worst,
                         std::abs(direct.probabilities[i] - iterative.probabilities[i]));
    }
    return {"iterative_vs_direct_solver", worst < 1e-10, "sup gap " + num(worst)};
}

CheckResult check_xi_vs_simulation(std::uint64_t seed, std::int64_t alpha) {
    const IfsParams params = validate_params(alpha, 1, 1.0 / 3.0);
    const auto converged = xi_converged(params, 1e-6);
    SimConfig cfg;
    cfg.seed = seed;
    cfg.steps = 10000000;
    cfg.burn_in = 1000;
    const auto est = simulate_lumped_digits(params, cfg);
    double worst = 0.0;
    for (std::size_t k = 0; k < est.frequencies.size(); ++k) {
        worst = std::max(worst, std::abs(est.frequencies[k] - converged.xi.xi[k]));
    }
    return {"xi_chain_vs_simulation_alpha" + std::to_string(alpha), worst < 2e-3,
            "sup gap " + num(worst)};
}

CheckResult check_mass_exponent_identity() {
    bool ok = true;
    for (const std::int64_t alpha : {2, 3, 5}) {
        for (std::int64_t n = 0; n <= 2048 && ok; ++n) {
            for (std::int64_t k = 0; k <= 10 && ok; ++k) {
                // independent digit-sum route: floor(n/alpha^k) plus the sum
                // of the k lowest base-alpha digits of n
                std::int64_t m = n;
                std::int64_t digit_sum = 0;
                for (std::int64_t i = 0; i < k; ++i) {
                    digit_sum += m % alpha;
                    m /= alpha;
                }
                ok = mass_exponent(n, k, alpha) == m + digit_sum;
            }
        }
    }
    return {"mass_exponent_identity", ok, ok ? "exact over grid" : "mismatch"};
}

CheckResult check_barreira_vs_eggleston() {
    double worst = 0.0;
    for (int i = 1; i <= 19; ++i) {
        const double t = 0.05 * i;
        const double q[2] = {1.0 - t, t};
        const double gap =
            std::abs(barreira_dim(2, t).dimension - eggleston_dim(q, 2));
        worst = std::max(worst, gap);
    }
    return {"barreira_vs_eggleston_base2", worst < 1e-10, "sup gap " + num(worst)};
}

CheckResult check_naive_identity() {
    double worst = 0.0;
    for (const std::int64_t alpha : {2, 3, 5}) {
        for (int i = 1; i <= 5; ++i) {
            const double p = 0.1 * i;
            const IfsParams params = validate_params(alpha, 1, p);
            const double gap =
                std::abs(naive_upper_bound(params) - dim_upper_line(p / (1.0 - p), params));
            worst = std::max(worst, gap);
        }
    }
    return {"naive_equals_upper_line", worst < 1e-12, "sup gap " + num(worst)};
}

CheckResult check_upper_below_naive() {
    bool ok = true;
    double margin = 1e9;
    for (const std::int64_t alpha : {2, 3, 5}) {
        for (int i = 1; i <= 5; ++i) {
            const double p = 0.1 * i;
            const IfsParams params = validate_params(alpha, 1, p);
            const auto converged = xi_converged(params, 1e-8);
            const auto bounds =
                bounds_from_xi(converged.xi, params, check_applicability(params));
            const double cap = std::min(1.0, bounds.naive_upper);
            margin = std::min(margin, cap - bounds.hausdorff_upper);
            ok = ok && bounds.hausdorff_upper <= cap + 1e-12;
        }
    }
    return {"upper_bound_below_naive", ok, "min margin " + num(margin)};
}

CheckResult check_invariance_residual() {
    const IfsParams params = validate_params(2, 1, 1.0 / 3.0);
    const auto sv = solve_stationary_exact(build_truncated_chain(params, 200));
    const double worst = invariance_residual(sv, params, 50);
    return {"unit_interval_invariance", worst < 1e-6, "max residual " + num(worst)};
}

CheckResult check_block_ratio() {
    const IfsParams params = validate_params(2, 1, 1.0 / 3.0);
    const auto sv = solve_stationary_exact(build_truncated_chain(params, 400));
    const double target = params.p / (1.0 - params.p);
    double worst = 0.0;
    for (std::int64_t x = 1; x <= 10; ++x) {
        double block = 0.0;
        for (std::int64_t m = x; m < params.alpha * x; ++m) {
            block += sv.probabilities[static_cast<std::size_t>(m)];
        }
        worst = std::max(
            worst, std::abs(block / sv.probabilities[static_cast<std::size_t>(x - 1)] -
                            target));
    }
    return {"block_mass_ratio", worst < 1e-9, "max |ratio - p/(1-p)| " + num(worst)};
}

CheckResult check_geometric_decay() {
    const IfsParams params = validate_params(2, 1, 1.0 / 3.0);
    const auto sv = solve_stationary_exact(build_truncated_chain(params, 400));
    const double slope = least_squares_log_slope(sv, 20, 40);
    const double rel = std::abs(slope - std::log(params.p)) / std::abs(std::log(params.p));

    const auto grid = base_grid_from_stationary(sv, params);
    const auto report =
        envelope_check(grid, envelope_constants(grid, params), 0.0);
    const bool ok = rel < 0.02 && report.all_pass;
    return {"geometric_decay_and_envelope", ok,
            "slope rel err " + num(rel) + (report.all_pass ? ", envelope holds" : ", envelope fails")};
}

CheckResult check_refinement() {
    const IfsParams params = validate_params(2, 1, 1.0 / 3.0);
    const auto sv = solve_stationary_exact(build_truncated_chain(params, 400));
    std::vector<MassGrid> grids{base_grid_from_stationary(sv, params)};
    for (int k = 1; k <= 3; ++k) grids.push_back(refine_grid(grids.back()));

    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const auto& child = grids[static_cast<std::size_t>(k)];
        const auto& parent = grids[static_cast<std::size_t>(k - 1)];
        const std::int64_t parents_in_region =
            10 * static_cast<std::int64_t>(std::pow(params.alpha, k - 1));
        for (std::int64_t n = 0; n < parents_in_region; ++n) {
            double children = 0.0;
            for (std::int64_t j = 0; j < params.alpha; ++j) {
                children += child.masses[static_cast<std::size_t>(n * params.alpha + j)];
            }
            worst = std::max(worst,
                             std::abs(children - parent.masses[static_cast<std::size_t>(n)]));
        }
    }

    const auto constants = envelope_constants(grids[0], params);
    bool envelopes = true;
    for (int k = 1; k <= 3; ++k) {
        const std::int64_t indices_in_region =
            10 * static_cast<std::int64_t>(std::pow(params.alpha, k));
        MassGrid region = grids[static_cast<std::size_t>(k)];
        region.masses.resize(static_cast<std::size_t>(indices_in_region));
        envelopes = envelopes && envelope_check(region, constants, 1e-6).all_pass;
    }
    const bool ok = worst < 1e-12 && envelopes;
    return {"refinement_conservation_and_envelope", ok, "worst child-sum gap " + num(worst)};
}

CheckResult check_spectrum_sanity() {
    const IfsParams params = validate_params(5, 1, 1.0 / 3.0);
    const auto curve = spectrum_lower_bounds(params, check_applicability(params), 512, 1.0);
    const double intercept = dim_upper_line(0.0, params);
    bool ok = true;
    double prev = 0.0;
    for (std::size_t i = 0; i < curve.t_grid.size(); ++i) {
        const double t = curve.t_grid[i];
        const double b = curve.upper_spectrum_lb[i];
        ok = ok && b <= t + 1e-9;
        if (t <= intercept) ok = ok && b == 0.0;
        ok = ok && b >= prev - 1e-12;  // non-decreasing up to the clamp plateau
        prev = b;
    }
    return {"spectrum_shape", ok, ok ? "0 until intercept, then non-decreasing" : "violated"};
}

CheckResult check_simulation_determinism(std::uint64_t seed) {
    const IfsParams params = validate_params(2, 1, 1.0 / 3.0);
    SimConfig cfg;
    cfg.seed = seed;
    cfg.steps = 200000;
    cfg.burn_in = 1000;
    const auto a = simulate_lumped_digits(params, cfg);
    const auto b = simulate_lumped_digits(params, cfg);
    const bool ok = a.counts == b.counts && a.digits_emitted == b.digits_emitted;
    return {"seeded_determinism", ok, ok ? "identical reruns" : "mismatch"};
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed) {
    std::vector<CheckResult> results;
    results.push_back(check_small_chain_exact());
    results.push_back(check_small_chain_matrix());
    results.push_back(check_power_vs_exact());
    results.push_back(check_xi_vs_simulation(seed, 2));
    results.push_back(check_xi_vs_simulation(seed, 5));
    results.push_back(check_mass_exponent_identity());
    results.push_back(check_barreira_vs_eggleston());
    results.push_back(check_naive_identity());
    results.push_back(check_upper_below_naive());
    results.push_back(check_invariance_residual());
    results.push_back(check_block_ratio());
    results.push_back(check_geometric_decay());
    results.push_back(check_refinement());
    results.push_back(check_spectrum_sanity());
    results.push_back(check_simulation_determinism(seed));
    return results;
}

std::string format_verification_table(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (const auto& r : results) {
        out << (r.pass ? "PASS  " : "FAIL  ") << r.name
            << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    out << passed << "/" << results.size() << " checks passed\n";
    return out.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace pidim
