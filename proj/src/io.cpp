#include "sparsereg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sparsereg {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::shared_ptr<DenseOperator> load_dense_operator(const std::string& path) {
    auto in = open_input(path);
    Eigen::Index nrows = 0, ncols = 0;
    if (!(in >> nrows >> ncols) || nrows < 1 || ncols < 1) {
        throw std::runtime_error("malformed matrix file (bad header): " + path);
    }
    RowMajorMatrix m(nrows, ncols);
    for (Eigen::Index i = 0; i < nrows; ++i) {
        for (Eigen::Index j = 0; j < ncols; ++j) {
            if (!(in >> m(i, j))) {
                throw std::runtime_error("malformed matrix file (missing entries): " + path);
            }
        }
    }
    return std::make_shared<DenseOperator>(std::move(m));
}

void save_dense_operator(const std::string& path, const DenseOperator& op) {
    auto out = open_output(path);
    out << op.rows() << ' ' << op.cols() << '\n';
    const auto& m = op.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << format_double(m(i, j)) << (j + 1 < m.cols() ? ' ' : '\n');
        }
    }
}

Vector load_vector(const std::string& path) {
    auto in = open_input(path);
    std::vector<double> values;
    double v;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw std::runtime_error("malformed vector file: " + path);
    Vector out(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<Eigen::Index>(i)) = values[i];
    return out;
}

void save_vector(const std::string& path, const Vector& v) {
    auto out = open_output(path);
    for (Eigen::Index i = 0; i < v.size(); ++i) out << format_double(v(i)) << '\n';
}

PenaltySpec load_penalty(const std::string& path, bool experimental_subunit_q) {
    auto in = open_input(path);
    std::vector<double> lambdas, qs;
    double l, q;
    while (in >> l >> q) {
        lambdas.push_back(l);
        qs.push_back(q);
    }
    if (!in.eof()) throw std::runtime_error("malformed penalty file: " + path);
    const auto n = static_cast<Eigen::Index>(lambdas.size());
    Vector lv(n), qv(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        lv(i) = lambdas[static_cast<std::size_t>(i)];
        qv(i) = qs[static_cast<std::size_t>(i)];
    }
    return make_penalty(std::move(lv), std::move(qv), experimental_subunit_q);
}

void save_penalty(const std::string& path, const PenaltySpec& p) {
    auto out = open_output(path);
    for (Eigen::Index i = 0; i < p.lambda.size(); ++i) {
        out << format_double(p.lambda(i)) << ' ' << format_double(p.q(i)) << '\n';
    }
}

Vector PgmImage::to_unit_vector() const {
    Vector v(static_cast<Eigen::Index>(pixels.size()));
    const double scale = maxval > 0 ? 1.0 / maxval : 1.0;
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = pixels[i] * scale;
    }
    return v;
}

PgmImage pgm_from_unit_vector(const Vector& v, int height, int width) {
    if (v.size() != static_cast<Eigen::Index>(height) * width) {
        throw std::invalid_argument("pgm_from_unit_vector: size mismatch");
    }
    PgmImage img;
    img.width = width;
    img.height = height;
    img.maxval = 255;
    img.pixels.resize(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double clamped = std::clamp(v(i), 0.0, 1.0);
        img.pixels[static_cast<std::size_t>(i)] =
            static_cast<int>(std::lround(clamped * 255.0));
    }
    return img;
}

namespace {

// Reads the next PGM token, skipping whitespace and # comments.
std::string next_pgm_token(std::istream& in) {
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        return tok;
    }
    return {};
}

int next_pgm_int(std::istream& in, const std::string& path) {
    const std::string tok = next_pgm_token(in);
    try {
        std::size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed PGM file: " + path);
    }
}

}  // namespace

PgmImage load_pgm(const std::string& path) {
    auto in = open_input(path);
    if (next_pgm_token(in) != "P2") {
        throw std::runtime_error("malformed PGM file (expected P2): " + path);
    }
    PgmImage img;
    img.width = next_pgm_int(in, path);
    img.height = next_pgm_int(in, path);
    img.maxval = next_pgm_int(in, path);
    if (img.width < 1 || img.height < 1 || img.maxval < 1 || img.maxval > 65535) {
        throw std::runtime_error("malformed PGM file (bad dimensions): " + path);
    }
    const std::size_t count =
        static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
    img.pixels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int v = next_pgm_int(in, path);
        if (v < 0 || v > img.maxval) {
            throw std::runtime_error("malformed PGM file (pixel out of range): " + path);
        }
        img.pixels.push_back(v);
    }
    return img;
}

void save_pgm(const std::string& path, const PgmImage& image) {
    auto out = open_output(path);
    out << "P2\n" << image.width << ' ' << image.height << "\n255\n";
    for (int i = 0; i < image.height; ++i) {
        for (int j = 0; j < image.width; ++j) {
            out << image.pixels[static_cast<std::size_t>(i) * image.width + j]
                << (j + 1 < image.width ? ' ' : '\n');
        }
    }
}

void write_trace_csv(std::ostream& os, const IterateTrace& trace) {
    os << "iter,F,G,eps,step_norm,residual_norm\n";
    auto field = [](double v) { return std::isnan(v) ? std::string() : format_double(v); };
    for (std::size_t i = 0; i < trace.size(); ++i) {
        os << (i + 1) << ',' << format_double(trace.objective[i]) << ','
           << field(trace.surrogate[i]) << ',' << field(trace.eps[i]) << ','
           << format_double(trace.step_norm[i]) << ','
           << format_double(trace.residual_norm[i]) << '\n';
    }
}

void write_trace_csv(const std::string& path, const IterateTrace& trace) {
    auto out = open_output(path);
    write_trace_csv(out, trace);
}

void write_path_csv(std::ostream& os, const PathResult& result) {
    os << "stage,tau,iters,F_final,recovery_error_pct\n";
    for (std::size_t i = 0; i < result.stages.size(); ++i) {
        const auto& st = result.stages[i];
        const double f_final =
            st.result.trace.size() > 0 ? st.result.trace.objective.back() : 0.0;
        os << (i + 1) << ',' << format_double(st.tau) << ','
           << st.result.iterations_run << ',' << format_double(f_final) << ','
           << (st.recovery_error_pct ? format_double(*st.recovery_error_pct)
                                     : std::string())
           << '\n';
    }
}

void write_path_csv(const std::string& path, const PathResult& result) {
    auto out = open_output(path);
    write_path_csv(out, result);
}

}  // namespace sparsereg
