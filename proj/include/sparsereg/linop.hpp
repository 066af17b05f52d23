#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <string>

namespace sparsereg {

using Vector = Eigen::VectorXd;
using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Abstract linear map A with forward (x -> Ax) and adjoint (y -> A^T y)
/// actions.  Implementations are immutable after construction and safe to
/// share across concurrent solver runs.
class LinearOperator {
public:
    virtual ~LinearOperator() = default;

    virtual Eigen::Index rows() const = 0;
    virtual Eigen::Index cols() const = 0;

    /// Returns Ax.  Throws std::invalid_argument on a length mismatch.
    Vector apply(const Vector& x) const;

    /// Returns A^T y.  Throws std::invalid_argument on a length mismatch.
    Vector apply_adjoint(const Vector& y) const;

private:
    virtual Vector do_apply(const Vector& x) const = 0;
    virtual Vector do_apply_adjoint(const Vector& y) const = 0;
};

using LinearOperatorPtr = std::shared_ptr<const LinearOperator>;

/// Explicit dense matrix, stored row-major.
class DenseOperator final : public LinearOperator {
public:
    /// Throws if the matrix contains non-finite entries.
    explicit DenseOperator(RowMajorMatrix entries);

    Eigen::Index rows() const override { return entries_.rows(); }
    Eigen::Index cols() const override { return entries_.cols(); }
    const RowMajorMatrix& matrix() const { return entries_; }

private:
    Vector do_apply(const Vector& x) const override;
    Vector do_apply_adjoint(const Vector& y) const override;

    RowMajorMatrix entries_;
};

/// 2D correlation with a zero-padded boundary, acting on images flattened
/// row-major to length height*width.  The adjoint is correlation with the
/// flipped kernel, which is exact for zero padding.
class ConvolutionOperator final : public LinearOperator {
public:
    /// Kernel side lengths must be odd.
    ConvolutionOperator(RowMajorMatrix kernel, Eigen::Index image_height,
                        Eigen::Index image_width);

    Eigen::Index rows() const override { return height_ * width_; }
    Eigen::Index cols() const override { return height_ * width_; }
    const RowMajorMatrix& kernel() const { return kernel_; }
    Eigen::Index image_height() const { return height_; }
    Eigen::Index image_width() const { return width_; }

private:
    Vector do_apply(const Vector& x) const override;
    Vector do_apply_adjoint(const Vector& y) const override;
    Vector correlate(const Vector& img, const RowMajorMatrix& kernel) const;

    RowMajorMatrix kernel_;
    RowMajorMatrix flipped_;
    Eigen::Index height_;
    Eigen::Index width_;
};

/// Keeps the leading kept_rows rows of an inner operator and drops the rest.
/// Dropping is equivalent to zeroing for the least-squares term and cheaper.
class SubsampledOperator final : public LinearOperator {
public:
    SubsampledOperator(LinearOperatorPtr inner, Eigen::Index kept_rows);

    Eigen::Index rows() const override { return kept_rows_; }
    Eigen::Index cols() const override { return inner_->cols(); }
    const LinearOperator& inner() const { return *inner_; }
    Eigen::Index kept_rows() const { return kept_rows_; }

private:
    Vector do_apply(const Vector& x) const override;
    Vector do_apply_adjoint(const Vector& y) const override;

    LinearOperatorPtr inner_;
    Eigen::Index kept_rows_;
};

/// factor * A for a fixed positive factor; used by rescale_problem.
class ScaledOperator final : public LinearOperator {
public:
    ScaledOperator(LinearOperatorPtr inner, double factor);

    Eigen::Index rows() const override { return inner_->rows(); }
    Eigen::Index cols() const override { return inner_->cols(); }
    double factor() const { return factor_; }

private:
    Vector do_apply(const Vector& x) const override;
    Vector do_apply_adjoint(const Vector& y) const override;

    LinearOperatorPtr inner_;
    double factor_;
};

/// Estimates the spectral norm ||A||_2 by power iteration on A^T A from a
/// seeded random start.  Stops once successive Rayleigh-quotient square
/// roots differ by less than tol, or after max_iters sweeps.  The estimate
/// is a Rayleigh quotient and never exceeds the true norm.
double estimate_spectral_norm(const LinearOperator& op, int max_iters = 200,
                              double tol = 1e-10, std::uint64_t seed = 0);

struct RescaledProblem {
    LinearOperatorPtr op;  ///< A / c
    Vector b;              ///< b / c
    double scale = 1.0;    ///< c
};

/// Rescales (A, b) by c = s / target when the spectral-norm estimate s
/// exceeds target, so the returned operator satisfies ||A/c||_2 <= target.
/// Solving the scaled problem with penalty lambda is equivalent to solving
/// the original with penalty c^2 * lambda.
RescaledProblem rescale_problem(LinearOperatorPtr op, const Vector& b,
                                double target = 0.99);

}  // namespace sparsereg
