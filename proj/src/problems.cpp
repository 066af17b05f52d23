#include "sparsereg/problems.hpp"

#include "sparsereg/rng.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sparsereg {

Vector logspace(double hi, double lo, int n) {
    if (!(hi > 0.0) || !(lo > 0.0)) {
        throw std::invalid_argument("logspace: endpoints must be positive");
    }
    if (n < 1) throw std::invalid_argument("logspace: n must be >= 1");
    Vector out(n);
    if (n == 1) {
        out(0) = hi;
        return out;
    }
    const double step = (std::log(lo) - std::log(hi)) / (n - 1);
    for (int i = 0; i < n; ++i) out(i) = std::exp(std::log(hi) + i * step);
    out(0) = hi;
    out(n - 1) = lo;
    return out;
}

namespace {

RowMajorMatrix seeded_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    RowMajorMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.normal();
    }
    return m;
}

Eigen::MatrixXd thin_orthonormal(Eigen::Index rows, Eigen::Index rank, Rng& rng) {
    const Eigen::MatrixXd g = seeded_gaussian(rows, rank, rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return qr.householderQ() * Eigen::MatrixXd::Identity(rows, rank);
}

}  // namespace

std::shared_ptr<DenseOperator> make_reverse_svd_matrix(
    int m, int n, const Vector& singular_values, std::uint64_t seed) {
    const Eigen::Index r = std::min(m, n);
    if (singular_values.size() != r) {
        throw std::invalid_argument("make_reverse_svd_matrix: need min(m, n) singular values");
    }
    for (Eigen::Index i = 0; i < r; ++i) {
        if (!(singular_values(i) >= 0.0) ||
            (i > 0 && singular_values(i) > singular_values(i - 1))) {
            throw std::invalid_argument(
                "make_reverse_svd_matrix: singular values must be nonincreasing and >= 0");
        }
    }
    Rng rng(seed);
    const Eigen::MatrixXd u = thin_orthonormal(m, r, rng);
    const Eigen::MatrixXd v = thin_orthonormal(n, r, rng);
    RowMajorMatrix a = u * singular_values.asDiagonal() * v.transpose();
    return std::make_shared<DenseOperator>(std::move(a));
}

Vector make_signal(int n, double density, SignalKind kind, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("make_signal: n must be >= 2");
    if (!(density > 0.0) || density > 1.0) {
        throw std::invalid_argument("make_signal: density must lie in (0, 1]");
    }
    Rng rng(seed);
    Vector x = Vector::Zero(n);

    auto fill_random_support = [&](int offset, int len, int nonzeros) {
        // Partial Fisher-Yates over the index range picks the support.
        std::vector<int> idx(len);
        std::iota(idx.begin(), idx.end(), offset);
        for (int i = 0; i < nonzeros; ++i) {
            const int j = rng.uniform_int(i, len - 1);
            std::swap(idx[i], idx[j]);
            x(idx[i]) = rng.normal();
        }
    };

    switch (kind) {
        case SignalKind::random_support: {
            const int nonzeros = static_cast<int>(density * n);
            if (nonzeros < 1) throw std::invalid_argument("make_signal: density * n must be >= 1");
            fill_random_support(0, n, nonzeros);
            break;
        }
        case SignalKind::staircase: {
            const int total = static_cast<int>(density * n);
            if (total < 1) throw std::invalid_argument("make_signal: density * n must be >= 1");
            const int plateaus = std::min(4, total);
            std::vector<int> lengths(plateaus, total / plateaus);
            for (int i = 0; i < total % plateaus; ++i) ++lengths[i];
            const int seg = n / plateaus;
            int cursor = 0;
            int remaining = total;
            double sign = 1.0;
            for (int pi = 0; pi < plateaus; ++pi) {
                const int seg_start = pi * seg;
                const int slack = std::max(0, seg - lengths[pi]);
                int start = seg_start + (slack > 0 ? rng.uniform_int(0, slack) : 0);
                // cursor + remaining <= n, so the clamp keeps blocks disjoint
                // and in range even at high densities.
                start = std::min(std::max(start, cursor), n - remaining);
                const double height = sign * rng.uniform_int(1, 3);
                for (int j = 0; j < lengths[pi]; ++j) x(start + j) = height;
                cursor = start + lengths[pi];
                remaining -= lengths[pi];
                sign = -sign;
            }
            break;
        }
        case SignalKind::half_sparse_half_dense: {
            const int first = (n + 1) / 2;
            const int nonzeros =
                std::max(1, static_cast<int>(density * first));
            fill_random_support(0, first, nonzeros);
            for (int k = first; k < n; ++k) x(k) = rng.normal();
            break;
        }
    }
    return x;
}

SyntheticProblem subsample_rows(const SyntheticProblem& prob, double fraction) {
    if (!(fraction > 0.0) || fraction > 1.0) {
        throw std::invalid_argument("subsample_rows: fraction must lie in (0, 1]");
    }
    const Eigen::Index m = prob.op->rows();
    const auto kept =
        static_cast<Eigen::Index>(std::ceil(fraction * static_cast<double>(m)));
    if (kept < 1) throw std::invalid_argument("subsample_rows: no rows kept");

    SyntheticProblem out;
    if (kept == m) {
        out.op = prob.op;
        out.b = prob.b;
    } else {
        out.op = std::make_shared<SubsampledOperator>(prob.op, kept);
        out.b = prob.b.head(kept);
    }
    out.x_true = prob.x_true;
    out.seed = prob.seed;
    out.description = prob.description + " (first " + std::to_string(kept) + " rows)";
    return out;
}

RowMajorMatrix make_gaussian_blur_kernel(int size, double sigma,
                                         double amplitude) {
    if (size < 1 || size % 2 == 0) {
        throw std::invalid_argument("make_gaussian_blur_kernel: size must be odd and >= 1");
    }
    if (!(sigma > 0.0) || !(amplitude > 0.0)) {
        throw std::invalid_argument("make_gaussian_blur_kernel: sigma and amplitude must be > 0");
    }
    const double c = (size - 1) / 2.0;
    RowMajorMatrix kernel(size, size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            const double d2 = (i - c) * (i - c) + (j - c) * (j - c);
            kernel(i, j) = amplitude * std::exp(-d2 / (2.0 * sigma * sigma));
        }
    }
    return kernel;
}

Vector add_noise_snr(const Vector& b, double snr, std::uint64_t seed) {
    if (!(snr > 0.0)) throw std::invalid_argument("add_noise_snr: snr must be > 0");
    const double bn = b.norm();
    if (bn == 0.0) throw std::invalid_argument("add_noise_snr: b must be nonzero");
    Rng rng(seed);
    Vector e(b.size());
    for (Eigen::Index k = 0; k < e.size(); ++k) e(k) = rng.normal();
    e *= bn / (snr * e.norm());
    return b + e;
}

double recovery_error(const Vector& x, const Vector& x_true) {
    const double tn = x_true.norm();
    if (tn == 0.0) throw std::invalid_argument("recovery_error: x_true must be nonzero");
    return 100.0 * (x - x_true).norm() / tn;
}

SyntheticProblem make_conditioned_problem(int m, int n, double sv_hi,
                                          double sv_lo, double density,
                                          SignalKind kind, std::uint64_t seed) {
    SyntheticProblem prob;
    prob.op = make_reverse_svd_matrix(m, n, logspace(sv_hi, sv_lo, std::min(m, n)),
                                      derive_seed(seed, 1));
    prob.x_true = make_signal(n, density, kind, derive_seed(seed, 2));
    prob.b = prob.op->apply(*prob.x_true);
    prob.seed = seed;
    prob.description = std::to_string(m) + "x" + std::to_string(n) +
                       " sv " + std::to_string(sv_hi) + ".." + std::to_string(sv_lo);
    return prob;
}

}  // namespace sparsereg
