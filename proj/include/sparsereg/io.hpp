#pragma once

#include "sparsereg/continuation.hpp"
#include "sparsereg/penalty.hpp"
#include "sparsereg/solvers.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsereg {

/// Formats a double with enough digits to round-trip, identically on every
/// run of the same build (used by all CSV/text writers).
std::string format_double(double v);

/// Matrix file: first line "nrows ncols", then entries row by row,
/// whitespace-delimited.
std::shared_ptr<DenseOperator> load_dense_operator(const std::string& path);
void save_dense_operator(const std::string& path, const DenseOperator& op);

/// One value per line.
Vector load_vector(const std::string& path);
void save_vector(const std::string& path, const Vector& v);

/// Two columns per line: lambda_k q_k.
PenaltySpec load_penalty(const std::string& path,
                         bool experimental_subunit_q = false);
void save_penalty(const std::string& path, const PenaltySpec& p);

/// Plain PGM (P2).  Pixels are stored row-major in [0, maxval].
struct PgmImage {
    int width = 0;
    int height = 0;
    int maxval = 255;
    std::vector<int> pixels;

    /// Pixels scaled to [0, 1], flattened row-major.
    Vector to_unit_vector() const;
};

/// Builds a maxval-255 image from unit-scale values, clamping to [0, 1].
PgmImage pgm_from_unit_vector(const Vector& v, int height, int width);

PgmImage load_pgm(const std::string& path);
void save_pgm(const std::string& path, const PgmImage& image);

/// Trace CSV: header iter,F,G,eps,step_norm,residual_norm; one row per
/// iteration; G and eps are empty where not recorded (ISTA/FISTA).
void write_trace_csv(std::ostream& os, const IterateTrace& trace);
void write_trace_csv(const std::string& path, const IterateTrace& trace);

/// Path CSV: header stage,tau,iters,F_final,recovery_error_pct; stages
/// numbered from 1; recovery column empty when no ground truth is known.
void write_path_csv(std::ostream& os, const PathResult& result);
void write_path_csv(const std::string& path, const PathResult& result);

}  // namespace sparsereg
