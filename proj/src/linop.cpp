#include "sparsereg/linop.hpp"

#include "sparsereg/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsereg {

namespace {

void check_length(const char* what, Eigen::Index expected, Eigen::Index actual) {
    if (expected != actual) {
        throw std::invalid_argument(std::string(what) + ": expected length " +
                                    std::to_string(expected) + ", got " +
                                    std::to_string(actual));
    }
}

}  // namespace

Vector LinearOperator::apply(const Vector& x) const {
    check_length("apply", cols(), x.size());
    return do_apply(x);
}

Vector LinearOperator::apply_adjoint(const Vector& y) const {
    check_length("apply_adjoint", rows(), y.size());
    return do_apply_adjoint(y);
}

DenseOperator::DenseOperator(RowMajorMatrix entries)
    : entries_(std::move(entries)) {
    if (!entries_.allFinite()) {
        throw std::invalid_argument("DenseOperator: non-finite entries");
    }
}

Vector DenseOperator::do_apply(const Vector& x) const { return entries_ * x; }

Vector DenseOperator::do_apply_adjoint(const Vector& y) const {
    return entries_.transpose() * y;
}

ConvolutionOperator::ConvolutionOperator(RowMajorMatrix kernel,
                                         Eigen::Index image_height,
                                         Eigen::Index image_width)
    : kernel_(std::move(kernel)), height_(image_height), width_(image_width) {
    if (kernel_.rows() % 2 == 0 || kernel_.cols() % 2 == 0) {
        throw std::invalid_argument("ConvolutionOperator: kernel side lengths must be odd");
    }
    if (height_ <= 0 || width_ <= 0) {
        throw std::invalid_argument("ConvolutionOperator: image dimensions must be positive");
    }
    flipped_ = kernel_.reverse();
}

Vector ConvolutionOperator::correlate(const Vector& img,
                                      const RowMajorMatrix& kernel) const {
    const Eigen::Index kh = kernel.rows();
    const Eigen::Index kw = kernel.cols();
    const Eigen::Index ch = (kh - 1) / 2;
    const Eigen::Index cw = (kw - 1) / 2;
    Vector out = Vector::Zero(height_ * width_);
    for (Eigen::Index i = 0; i < height_; ++i) {
        for (Eigen::Index j = 0; j < width_; ++j) {
            double acc = 0.0;
            for (Eigen::Index u = -ch; u <= ch; ++u) {
                const Eigen::Index ii = i + u;
                if (ii < 0 || ii >= height_) continue;
                for (Eigen::Index v = -cw; v <= cw; ++v) {
                    const Eigen::Index jj = j + v;
                    if (jj < 0 || jj >= width_) continue;
                    acc += kernel(ch + u, cw + v) * img(ii * width_ + jj);
                }
            }
            out(i * width_ + j) = acc;
        }
    }
    return out;
}

Vector ConvolutionOperator::do_apply(const Vector& x) const {
    return correlate(x, kernel_);
}

Vector ConvolutionOperator::do_apply_adjoint(const Vector& y) const {
    return correlate(y, flipped_);
}

SubsampledOperator::SubsampledOperator(LinearOperatorPtr inner,
                                       Eigen::Index kept_rows)
    : inner_(std::move(inner)), kept_rows_(kept_rows) {
    if (!inner_) throw std::invalid_argument("SubsampledOperator: null inner operator");
    if (kept_rows_ < 1 || kept_rows_ > inner_->rows()) {
        throw std::invalid_argument("SubsampledOperator: kept_rows out of range");
    }
}

Vector SubsampledOperator::do_apply(const Vector& x) const {
    return inner_->apply(x).head(kept_rows_);
}

Vector SubsampledOperator::do_apply_adjoint(const Vector& y) const {
    Vector padded = Vector::Zero(inner_->rows());
    padded.head(kept_rows_) = y;
    return inner_->apply_adjoint(padded);
}

ScaledOperator::ScaledOperator(LinearOperatorPtr inner, double factor)
    : inner_(std::move(inner)), factor_(factor) {
    if (!inner_) throw std::invalid_argument("ScaledOperator: null inner operator");
    if (!(factor_ > 0.0) || !std::isfinite(factor_)) {
        throw std::invalid_argument("ScaledOperator: factor must be positive and finite");
    }
}

Vector ScaledOperator::do_apply(const Vector& x) const {
    return factor_ * inner_->apply(x);
}

Vector ScaledOperator::do_apply_adjoint(const Vector& y) const {
    return factor_ * inner_->apply_adjoint(y);
}

double estimate_spectral_norm(const LinearOperator& op, int max_iters,
                              double tol, std::uint64_t seed) {
    if (max_iters < 1) throw std::invalid_argument("estimate_spectral_norm: max_iters must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("estimate_spectral_norm: tol must be > 0");

    Rng rng(seed);
    Vector v(op.cols());
    for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = rng.normal();
    const double vn = v.norm();
    if (vn == 0.0) return 0.0;
    v /= vn;

    double estimate = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        const Vector av = op.apply(v);
        const double s = av.norm();  // Rayleigh-quotient square root, v is unit
        if (s == 0.0) return 0.0;
        if (it > 0 && std::abs(s - estimate) < tol) return s;
        estimate = s;
        Vector w = op.apply_adjoint(av);
        v = w / w.norm();
    }
    return estimate;
}

RescaledProblem rescale_problem(LinearOperatorPtr op, const Vector& b,
                                double target) {
    if (!(target > 0.0 && target < 1.0)) {
        throw std::invalid_argument("rescale_problem: target must lie in (0, 1)");
    }
    const double s = estimate_spectral_norm(*op);
    RescaledProblem out;
    if (s <= target) {
        out.op = std::move(op);
        out.b = b;
        out.scale = 1.0;
        return out;
    }
    const double c = s / target;
    out.op = std::make_shared<ScaledOperator>(std::move(op), 1.0 / c);
    out.b = b / c;
    out.scale = c;
    return out;
}

}  // namespace sparsereg
