#pragma once

#include "sparsereg/linop.hpp"

#include <optional>
#include <string>

namespace sparsereg {

/// Operator, data vector and (when synthetic) the signal that generated it.
struct SyntheticProblem {
    LinearOperatorPtr op;
    Vector b;
    std::optional<Vector> x_true;
    std::uint64_t seed = 0;
    std::string description;
};

enum class SignalKind { random_support, staircase, half_sparse_half_dense };

/// n values geometrically spaced from hi down to lo, endpoints inclusive.
Vector logspace(double hi, double lo, int n);

/// A = U S V^T with U, V the thin Q factors of seeded Gaussian matrices and
/// S the requested singular values (nonincreasing, length min(m, n)).
std::shared_ptr<DenseOperator> make_reverse_svd_matrix(int m, int n,
                                                       const Vector& singular_values,
                                                       std::uint64_t seed);

/// Test signals:
///  - random_support: floor(density*n) uniformly placed standard-normal spikes;
///  - staircase: 4 constant plateaus totalling floor(density*n) nonzeros,
///    seeded magnitudes in {1,2,3} with alternating sign;
///  - half_sparse_half_dense: sparse first half at the given density, fully
///    dense standard-normal second half.
Vector make_signal(int n, double density, SignalKind kind, std::uint64_t seed);

/// Keeps the leading ceil(fraction * m) rows of operator and data.
SyntheticProblem subsample_rows(const SyntheticProblem& prob, double fraction);

/// kernel[i][j] = amplitude * exp(-((i-c)^2 + (j-c)^2) / (2 sigma^2)),
/// c = (size-1)/2.  Peak value is the amplitude; the kernel is not
/// normalized.  size must be odd.
RowMajorMatrix make_gaussian_blur_kernel(int size, double sigma,
                                         double amplitude);

/// b + e with seeded white Gaussian e scaled so ||b|| / ||e|| = snr exactly.
Vector add_noise_snr(const Vector& b, double snr, std::uint64_t seed);

/// 100 * ||x - x_true||_2 / ||x_true||_2.
double recovery_error(const Vector& x, const Vector& x_true);

/// Reverse-SVD operator with singular values logspaced sv_hi..sv_lo, signal
/// of the given kind, and b = A x_true (noiseless).
SyntheticProblem make_conditioned_problem(int m, int n, double sv_hi,
                                          double sv_lo, double density,
                                          SignalKind kind, std::uint64_t seed);

}  // namespace sparsereg
