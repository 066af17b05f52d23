#pragma once

#include "sparsereg/continuation.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sparsereg {

/// Invalid configuration (unknown key, bad value, missing file).  The CLI
/// maps this to exit code 2; solver failures map to exit code 3.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Settings for the experiment runners.  Defaults are desk-scale versions
/// of the reference setups; make_default_config picks per-experiment values
/// and a `key = value` config file or CLI overrides adjust them.
struct ExperimentConfig {
    std::string experiment;  ///< bench | cs | mixedq | deblur | solve

    std::uint64_t seed = 1;
    std::string out_dir = "out";
    bool audit = false;
    std::vector<SolverVariant> solvers = {SolverVariant::irls, SolverVariant::firls,
                                          SolverVariant::ista, SolverVariant::fista};

    int m = 100;
    int n = 100;
    double sv_hi = 1.0;
    double sv_lo = 1e-4;
    double sv_lo_well = 0.1;   ///< bench: well-conditioned variant
    double sv_lo_ill = 1e-4;   ///< bench: ill-conditioned variant
    double density = 0.05;
    double subsample_fraction = 1.0;
    std::string signal = "random_support";

    int iters = 300;
    int trials = 10;
    double tau_divisor = 1e5;
    double alpha = 0.9;
    double eps_init = 1.0;

    int stages = 20;
    double path_divisor = 50000.0;
    int stage_iters = 40;

    double q = 1.0;
    double q_dense = 1.9;  ///< mixedq: exponent for the dense half
    bool experimental_subunit_q = false;

    std::string image_path;  ///< deblur: empty selects the synthetic image
    int image_size = 32;
    int kernel_size = 9;
    double kernel_sigma = 2.5;
    double kernel_amplitude = 2.9;
    double snr = 25.0;  ///< 0 disables noise

    std::string matrix_path;  ///< solve: operator file
    std::string b_path;       ///< solve: data file
    std::string penalty_path; ///< solve: optional penalty file
    double lambda = -1.0;     ///< solve: uniform lambda when no penalty file
    bool rescale = true;      ///< solve: rescale to spectral norm 0.99
};

ExperimentConfig make_default_config(const std::string& experiment);

/// Reads `key = value` lines ('#' starts a comment).  Unknown keys and
/// unparsable values raise ConfigError.
void apply_config_file(ExperimentConfig& cfg, const std::string& path);
void apply_override(ExperimentConfig& cfg, const std::string& key,
                    const std::string& value);

/// Single run of every solver on both conditioning variants at
/// tau = lambda_max / tau_divisor; per-(matrix, solver) trace CSVs for the
/// first trial plus a median summary over all trials.
void run_convergence_bench(const ExperimentConfig& cfg);

/// Staircase compressive-sensing recovery through a warm-started tau path;
/// per-solver path CSVs and final solution vectors.
void run_cs_recovery(const ExperimentConfig& cfg);

/// Half-sparse/half-dense signal: reweighted solvers with per-half q
/// against the l1-only baselines; path CSVs plus a comparison summary.
void run_mixed_q(const ExperimentConfig& cfg);

/// Non-blind Gaussian deconvolution: blur, add noise, reconstruct through a
/// tau path; writes blurred/noisy/reconstructed PGMs and a summary.
void run_deblur(const ExperimentConfig& cfg);

/// File-driven solve: operator + data from disk, one solver, trace CSV and
/// solution vector out.
void run_solve(const ExperimentConfig& cfg);

/// Dispatches on cfg.experiment.
void run_experiment(const ExperimentConfig& cfg);

/// Parses argv (without the program name) and runs the selected experiment.
/// Returns the process exit code: 0 ok, 2 config error, 3 solver error.
int run_cli(const std::vector<std::string>& args);

}  // namespace sparsereg
