#include "sparsereg/experiments.hpp"

#include "sparsereg/io.hpp"
#include "sparsereg/rng.hpp"
#include "sparsereg/surrogate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace sparsereg {

namespace fs = std::filesystem;

namespace {

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory: " + dir);
}

std::string join_path(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

SignalKind signal_kind_from_string(const std::string& name) {
    if (name == "random_support") return SignalKind::random_support;
    if (name == "staircase") return SignalKind::staircase;
    if (name == "half_sparse_half_dense") return SignalKind::half_sparse_half_dense;
    throw ConfigError("unknown signal kind: " + name);
}

bool is_reweighted(SolverVariant v) {
    return v == SolverVariant::irls || v == SolverVariant::firls;
}

void audit_or_throw(const LinearOperator& op, const Vector& b,
                    const SolverResult& result, const PenaltySpec& p,
                    const std::string& label) {
    const auto violations =
        audit_monotone_chain(op, b, snapshots_from_result(result), p);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "surrogate chain audit failed for " << label << ":";
        for (const auto& v : violations) {
            msg << " [step " << v.step << " link " << v.link << "]";
        }
        throw std::runtime_error(msg.str());
    }
}

SolverConfig base_solver_config(const ExperimentConfig& cfg, SolverVariant variant,
                                int max_iters, bool audit_this_run) {
    SolverConfig scfg;
    scfg.variant = variant;
    scfg.max_iters = max_iters;
    scfg.alpha = cfg.alpha;
    scfg.eps_init = cfg.eps_init;
    scfg.step_tol = 0.0;  // fixed iteration budgets keep outputs reproducible
    scfg.trace_surrogate = is_reweighted(variant);
    scfg.record_iterates = audit_this_run;
    return scfg;
}

// Audits every IRLS stage of a continuation run.
void audit_path(const ExperimentConfig& cfg, const LinearOperator& op,
                const Vector& b, const PathResult& pres, const Vector& q,
                const std::string& label) {
    for (std::size_t i = 0; i < pres.stages.size(); ++i) {
        const auto& st = pres.stages[i];
        const PenaltySpec p =
            make_penalty(Vector::Constant(q.size(), st.tau), q,
                         cfg.experimental_subunit_q);
        audit_or_throw(op, b, st.result, p,
                       label + " stage " + std::to_string(i));
    }
}

PgmImage checkerboard_image(int size) {
    PgmImage img;
    img.width = size;
    img.height = size;
    img.maxval = 255;
    img.pixels.resize(static_cast<std::size_t>(size) * size);
    const int block = std::max(1, size / 4);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            const bool on = ((i / block) + (j / block)) % 2 == 1;
            img.pixels[static_cast<std::size_t>(i) * size + j] = on ? 204 : 0;
        }
    }
    return img;
}

}  // namespace

ExperimentConfig make_default_config(const std::string& experiment) {
    ExperimentConfig cfg;
    cfg.experiment = experiment;
    if (experiment == "bench") {
        cfg.m = cfg.n = 100;
        cfg.density = 0.05;
        cfg.signal = "random_support";
    } else if (experiment == "cs") {
        cfg.m = cfg.n = 200;
        cfg.density = 0.12;
        cfg.subsample_fraction = 1.0 / 3.0;
        cfg.stage_iters = 100;
        cfg.signal = "staircase";
    } else if (experiment == "mixedq") {
        cfg.m = cfg.n = 200;
        cfg.density = 0.1;
        cfg.stage_iters = 40;
        cfg.signal = "half_sparse_half_dense";
    } else if (experiment == "deblur") {
        cfg.stages = 30;
        cfg.stage_iters = 40;
        cfg.solvers = {SolverVariant::irls};
    } else if (experiment == "solve") {
        cfg.iters = 1000;
        cfg.solvers = {SolverVariant::irls};
    } else {
        throw ConfigError("unknown experiment: " + experiment);
    }
    return cfg;
}

namespace {

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for " + key + ": " + value);
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad number for " + key + ": " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "1" || value == "true" || value == "on") return true;
    if (value == "0" || value == "false" || value == "off") return false;
    throw ConfigError("bad boolean for " + key + ": " + value);
}

std::vector<SolverVariant> parse_solvers(const std::string& value) {
    std::vector<SolverVariant> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(solver_variant_from_string(item));
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    }
    if (out.empty()) throw ConfigError("empty solver list");
    return out;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

void apply_override(ExperimentConfig& cfg, const std::string& key,
                    const std::string& value) {
    if (key == "seed") {
        try {
            cfg.seed = std::stoull(value);
        } catch (const std::exception&) {
            throw ConfigError("bad seed: " + value);
        }
    } else if (key == "out") {
        cfg.out_dir = value;
    } else if (key == "audit") {
        cfg.audit = parse_bool(key, value);
    } else if (key == "solvers") {
        cfg.solvers = parse_solvers(value);
    } else if (key == "m") {
        cfg.m = parse_int(key, value);
    } else if (key == "n") {
        cfg.n = parse_int(key, value);
    } else if (key == "sv_hi") {
        cfg.sv_hi = parse_real(key, value);
    } else if (key == "sv_lo") {
        cfg.sv_lo = parse_real(key, value);
    } else if (key == "sv_lo_well") {
        cfg.sv_lo_well = parse_real(key, value);
    } else if (key == "sv_lo_ill") {
        cfg.sv_lo_ill = parse_real(key, value);
    } else if (key == "density") {
        cfg.density = parse_real(key, value);
    } else if (key == "fraction" || key == "subsample_fraction") {
        cfg.subsample_fraction = parse_real(key, value);
    } else if (key == "iters") {
        cfg.iters = parse_int(key, value);
    } else if (key == "trials") {
        cfg.trials = parse_int(key, value);
    } else if (key == "tau_divisor") {
        cfg.tau_divisor = parse_real(key, value);
    } else if (key == "alpha") {
        cfg.alpha = parse_real(key, value);
    } else if (key == "eps_init") {
        cfg.eps_init = parse_real(key, value);
    } else if (key == "stages") {
        cfg.stages = parse_int(key, value);
    } else if (key == "divisor" || key == "path_divisor") {
        cfg.path_divisor = parse_real(key, value);
    } else if (key == "stage_iters") {
        cfg.stage_iters = parse_int(key, value);
    } else if (key == "q") {
        cfg.q = parse_real(key, value);
    } else if (key == "q_dense") {
        cfg.q_dense = parse_real(key, value);
    } else if (key == "experimental_subunit_q") {
        cfg.experimental_subunit_q = parse_bool(key, value);
    } else if (key == "signal") {
        cfg.signal = value;
    } else if (key == "image") {
        cfg.image_path = value;
    } else if (key == "image_size") {
        cfg.image_size = parse_int(key, value);
    } else if (key == "kernel_size") {
        cfg.kernel_size = parse_int(key, value);
    } else if (key == "kernel_sigma") {
        cfg.kernel_sigma = parse_real(key, value);
    } else if (key == "kernel_amplitude") {
        cfg.kernel_amplitude = parse_real(key, value);
    } else if (key == "snr") {
        cfg.snr = parse_real(key, value);
    } else if (key == "matrix") {
        cfg.matrix_path = value;
    } else if (key == "b") {
        cfg.b_path = value;
    } else if (key == "penalty") {
        cfg.penalty_path = value;
    } else if (key == "lambda") {
        cfg.lambda = parse_real(key, value);
    } else if (key == "rescale") {
        cfg.rescale = parse_bool(key, value);
    } else {
        throw ConfigError("unknown config key: " + key);
    }
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected key = value");
        }
        apply_override(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void run_convergence_bench(const ExperimentConfig& cfg) {
    ensure_out_dir(cfg.out_dir);
    const SignalKind kind = signal_kind_from_string(cfg.signal);
    const std::vector<std::pair<std::string, double>> variants = {
        {"A1", cfg.sv_lo_well}, {"A2", cfg.sv_lo_ill}};

    std::ofstream summary(join_path(cfg.out_dir, "bench_summary.csv"));
    if (!summary) throw ConfigError("cannot write bench summary");
    summary << "matrix,solver,trials,median_final_F,median_recovery_error_pct\n";

    for (std::size_t vi = 0; vi < variants.size(); ++vi) {
        const auto& [vname, sv_lo] = variants[vi];
        std::vector<std::vector<double>> final_f(cfg.solvers.size());
        std::vector<std::vector<double>> rec_err(cfg.solvers.size());

        for (int trial = 0; trial < cfg.trials; ++trial) {
            const auto prob = make_conditioned_problem(
                cfg.m, cfg.n, cfg.sv_hi, sv_lo, cfg.density, kind,
                derive_seed(derive_seed(cfg.seed, vi), trial));
            const auto scaled = rescale_problem(prob.op, prob.b);
            const double tau =
                lambda_max(*scaled.op, scaled.b) / cfg.tau_divisor;
            const auto p = make_uniform_penalty(cfg.n, tau, 1.0);

            for (std::size_t si = 0; si < cfg.solvers.size(); ++si) {
                const SolverVariant variant = cfg.solvers[si];
                const bool audit_run = cfg.audit && trial == 0 &&
                                       variant == SolverVariant::irls;
                const auto scfg =
                    base_solver_config(cfg, variant, cfg.iters, audit_run);
                const auto result = solve(*scaled.op, scaled.b, p, scfg);
                final_f[si].push_back(result.trace.objective.back());
                rec_err[si].push_back(
                    recovery_error(result.x_final, *prob.x_true));
                if (trial == 0) {
                    write_trace_csv(
                        join_path(cfg.out_dir, "trace_" + vname + "_" +
                                                   to_string(variant) + ".csv"),
                        result.trace);
                }
                if (audit_run) {
                    audit_or_throw(*scaled.op, scaled.b, result, p,
                                   vname + "/" + to_string(variant));
                }
            }
        }
        for (std::size_t si = 0; si < cfg.solvers.size(); ++si) {
            summary << vname << ',' << to_string(cfg.solvers[si]) << ','
                    << cfg.trials << ',' << format_double(median(final_f[si]))
                    << ',' << format_double(median(rec_err[si])) << '\n';
        }
    }
}

namespace {

// Shared driver for the continuation experiments: solves one warm-started
// path per solver and writes its stage CSV plus the final solution.
struct PathRun {
    SolverVariant variant;
    double final_recovery = 0.0;
    double final_f = 0.0;
    Vector x_final;
};

PathRun run_one_path(const ExperimentConfig& cfg, const SyntheticProblem& prob,
                     const Vector& q, const ContinuationPath& path,
                     SolverVariant variant, const std::string& file_tag) {
    SolverConfig scfg = base_solver_config(cfg, variant, path.per_stage_iters,
                                           cfg.audit && variant == SolverVariant::irls);
    const auto pres =
        solve_path(prob, q, path, scfg, cfg.experimental_subunit_q);
    write_path_csv(join_path(cfg.out_dir, "path_" + file_tag + ".csv"), pres);
    save_vector(join_path(cfg.out_dir, "x_" + file_tag + ".txt"), pres.x_final);
    if (cfg.audit && variant == SolverVariant::irls) {
        audit_path(cfg, *prob.op, prob.b, pres, q, file_tag);
    }
    PathRun run;
    run.variant = variant;
    run.final_f = pres.stages.back().result.trace.objective.back();
    run.final_recovery = pres.stages.back().recovery_error_pct.value_or(0.0);
    run.x_final = pres.x_final;
    return run;
}

}  // namespace

void run_cs_recovery(const ExperimentConfig& cfg) {
    ensure_out_dir(cfg.out_dir);
    const SignalKind kind = signal_kind_from_string(cfg.signal);
    auto prob = make_conditioned_problem(cfg.m, cfg.n, cfg.sv_hi, cfg.sv_lo,
                                         cfg.density, kind, cfg.seed);
    prob = subsample_rows(prob, cfg.subsample_fraction);
    const auto scaled = rescale_problem(prob.op, prob.b);
    prob.op = scaled.op;
    prob.b = scaled.b;

    ContinuationPath path = make_tau_path(lambda_max(*prob.op, prob.b),
                                          cfg.path_divisor, cfg.stages);
    path.per_stage_iters = cfg.stage_iters;
    const Vector q = Vector::Constant(cfg.n, cfg.q);

    std::ofstream summary(join_path(cfg.out_dir, "cs_summary.csv"));
    if (!summary) throw ConfigError("cannot write cs summary");
    summary << "solver,final_F,final_recovery_error_pct\n";
    for (const SolverVariant variant : cfg.solvers) {
        const auto run = run_one_path(cfg, prob, q, path, variant,
                                      to_string(variant));
        summary << to_string(variant) << ',' << format_double(run.final_f)
                << ',' << format_double(run.final_recovery) << '\n';
    }
}

void run_mixed_q(const ExperimentConfig& cfg) {
    ensure_out_dir(cfg.out_dir);
    const SignalKind kind = signal_kind_from_string(cfg.signal);
    auto prob = make_conditioned_problem(cfg.m, cfg.n, cfg.sv_hi, cfg.sv_lo,
                                         cfg.density, kind, cfg.seed);
    if (cfg.subsample_fraction < 1.0) {
        prob = subsample_rows(prob, cfg.subsample_fraction);
    }
    const auto scaled = rescale_problem(prob.op, prob.b);
    prob.op = scaled.op;
    prob.b = scaled.b;

    ContinuationPath path = make_tau_path(lambda_max(*prob.op, prob.b),
                                          cfg.path_divisor, cfg.stages);
    path.per_stage_iters = cfg.stage_iters;

    // First (ceil(n/2)) coordinates keep cfg.q; the dense half gets q_dense.
    const Eigen::Index half = (cfg.n + 1) / 2;
    Vector q_mixed = Vector::Constant(cfg.n, cfg.q);
    for (Eigen::Index k = half; k < cfg.n; ++k) q_mixed(k) = cfg.q_dense;
    const Vector q_l1 = Vector::Constant(cfg.n, 1.0);

    std::ofstream summary(join_path(cfg.out_dir, "mixedq_summary.csv"));
    if (!summary) throw ConfigError("cannot write mixedq summary");
    summary << "solver,penalty,final_recovery_error_pct\n";
    for (const SolverVariant variant : cfg.solvers) {
        const bool mixed = is_reweighted(variant);
        const auto run = run_one_path(
            cfg, prob, mixed ? q_mixed : q_l1, path, variant,
            std::string(mixed ? "mixedq_" : "l1_") + to_string(variant));
        summary << to_string(variant) << ',' << (mixed ? "mixed" : "l1") << ','
                << format_double(run.final_recovery) << '\n';
    }
}

void run_deblur(const ExperimentConfig& cfg) {
    ensure_out_dir(cfg.out_dir);
    const PgmImage input = cfg.image_path.empty()
                               ? checkerboard_image(cfg.image_size)
                               : load_pgm(cfg.image_path);
    const Vector x_true = input.to_unit_vector();
    const auto kernel = make_gaussian_blur_kernel(
        cfg.kernel_size, cfg.kernel_sigma, cfg.kernel_amplitude);
    const auto op = std::make_shared<ConvolutionOperator>(kernel, input.height,
                                                          input.width);
    const Vector blurred = op->apply(x_true);
    const Vector noisy = cfg.snr > 0.0
                             ? add_noise_snr(blurred, cfg.snr, derive_seed(cfg.seed, 3))
                             : blurred;

    SyntheticProblem prob;
    const auto scaled = rescale_problem(op, noisy);
    prob.op = scaled.op;
    prob.b = scaled.b;
    prob.x_true = x_true;
    prob.seed = cfg.seed;
    prob.description = "deblur";

    ContinuationPath path = make_tau_path(lambda_max(*prob.op, prob.b),
                                          cfg.path_divisor, cfg.stages);
    path.per_stage_iters = cfg.stage_iters;
    const Vector q = Vector::Constant(x_true.size(), cfg.q);

    const SolverVariant variant = cfg.solvers.front();
    const auto run = run_one_path(cfg, prob, q, path, variant, "deblur");
    const Vector& x_rec = run.x_final;

    // Display copies: the blur kernel is not normalized, so blurred images
    // are divided by its l1 mass before quantization.
    const double kernel_mass = kernel.cwiseAbs().sum();
    save_pgm(join_path(cfg.out_dir, "original.pgm"), input);
    save_pgm(join_path(cfg.out_dir, "blurred.pgm"),
             pgm_from_unit_vector(blurred / kernel_mass, input.height, input.width));
    save_pgm(join_path(cfg.out_dir, "noisy.pgm"),
             pgm_from_unit_vector(noisy / kernel_mass, input.height, input.width));
    save_pgm(join_path(cfg.out_dir, "reconstructed.pgm"),
             pgm_from_unit_vector(x_rec, input.height, input.width));

    std::ofstream summary(join_path(cfg.out_dir, "deblur_summary.csv"));
    if (!summary) throw ConfigError("cannot write deblur summary");
    summary << "height,width,snr,stages,stage_iters,err_blurred_noisy,err_reconstruction\n";
    summary << input.height << ',' << input.width << ','
            << format_double(cfg.snr) << ',' << cfg.stages << ','
            << cfg.stage_iters << ','
            << format_double((noisy - x_true).norm()) << ','
            << format_double((x_rec - x_true).norm()) << '\n';
}

void run_solve(const ExperimentConfig& cfg) {
    if (cfg.matrix_path.empty() || cfg.b_path.empty()) {
        throw ConfigError("solve requires matrix = <file> and b = <file>");
    }
    ensure_out_dir(cfg.out_dir);
    LinearOperatorPtr op;
    Vector b;
    PenaltySpec p;
    try {
        op = load_dense_operator(cfg.matrix_path);
        b = load_vector(cfg.b_path);
        if (!cfg.penalty_path.empty()) {
            p = load_penalty(cfg.penalty_path, cfg.experimental_subunit_q);
        } else {
            if (cfg.lambda < 0.0) {
                throw std::runtime_error("solve needs lambda = <value> or penalty = <file>");
            }
            p = make_uniform_penalty(op->cols(), cfg.lambda, cfg.q,
                                     cfg.experimental_subunit_q);
        }
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (b.size() != op->rows()) {
        throw ConfigError("b length does not match operator rows");
    }

    double scale = 1.0;
    if (cfg.rescale) {
        auto scaled = rescale_problem(op, b);
        op = scaled.op;
        b = scaled.b;
        scale = scaled.scale;
    }

    const SolverVariant variant = cfg.solvers.front();
    SolverConfig scfg;
    scfg.variant = variant;
    scfg.max_iters = cfg.iters;
    scfg.alpha = cfg.alpha;
    scfg.eps_init = cfg.eps_init;
    scfg.trace_surrogate = is_reweighted(variant);
    scfg.record_iterates = cfg.audit && variant == SolverVariant::irls;
    const auto result = solve(*op, b, p, scfg);
    if (scfg.record_iterates) {
        audit_or_throw(*op, b, result, p, "solve");
    }

    write_trace_csv(join_path(cfg.out_dir, "trace.csv"), result.trace);
    save_vector(join_path(cfg.out_dir, "x.txt"), result.x_final);
    std::cout << "solver=" << to_string(variant)
              << " iterations=" << result.iterations_run << " termination="
              << (result.termination == Termination::step_tol_reached
                      ? "step_tol"
                      : "max_iters")
              << " F=" << format_double(result.trace.objective.back())
              << " rescale_factor=" << format_double(scale) << '\n';
}

void run_experiment(const ExperimentConfig& cfg) {
    if (cfg.experiment == "bench") {
        run_convergence_bench(cfg);
    } else if (cfg.experiment == "cs") {
        run_cs_recovery(cfg);
    } else if (cfg.experiment == "mixedq") {
        run_mixed_q(cfg);
    } else if (cfg.experiment == "deblur") {
        run_deblur(cfg);
    } else if (cfg.experiment == "solve") {
        run_solve(cfg);
    } else {
        throw ConfigError("unknown experiment: " + cfg.experiment);
    }
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Sparse-regularization solvers and experiment runner"};
    app.require_subcommand(1);

    struct SubOptions {
        std::string config;
        std::string out;
        std::string seed;
        bool audit = false;
        std::vector<std::string> sets;
    };
    const std::vector<std::pair<std::string, std::string>> subs = {
        {"solve", "solve a problem loaded from matrix/vector files"},
        {"bench", "single-run convergence comparison on two conditionings"},
        {"cs", "compressive-sensing recovery with tau continuation"},
        {"mixedq", "half-sparse/half-dense recovery with per-half q"},
        {"deblur", "non-blind Gaussian deconvolution"},
    };
    std::map<std::string, SubOptions> opts;
    for (const auto& [name, desc] : subs) {
        auto* sub = app.add_subcommand(name, desc);
        auto& o = opts[name];
        sub->add_option("--config", o.config, "config file with key = value lines");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--out", o.out, "output directory");
        sub->add_flag("--audit", o.audit, "audit surrogate monotonicity on IRLS runs");
        sub->add_option("--set", o.sets, "override a config key (key=value)");
    }

    std::vector<const char*> argv;
    argv.push_back("sparsereg_cli");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        const auto& o = opts[name];
        ExperimentConfig cfg = make_default_config(name);
        if (!o.config.empty()) apply_config_file(cfg, o.config);
        for (const auto& kv : o.sets) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("--set expects key=value, got: " + kv);
            }
            apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (!o.seed.empty()) apply_override(cfg, "seed", o.seed);
        if (!o.out.empty()) cfg.out_dir = o.out;
        if (o.audit) cfg.audit = true;
        run_experiment(cfg);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace sparsereg
