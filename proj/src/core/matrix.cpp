#include "core/matrix.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "core/error.hpp"

namespace adlab {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols_)
            throw ConfigError("Matrix::from_rows: ragged row " + std::to_string(r));
        std::size_t c = 0;
        for (double v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& keep) const {
    Matrix out(rows_, keep.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        const double* src = data_.data() + r * cols_;
        double* dst = out.data_.data() + r * keep.size();
        for (std::size_t j = 0; j < keep.size(); ++j) dst[j] = src[keep[j]];
    }
    return out;
}

std::vector<double> Matrix::column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void Matrix::set_column(std::size_t c, std::span<const double> v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "Matrix::operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "Matrix::operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ConfigError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw ConfigError("matmul: inner dimension mismatch " + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()));
    Matrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a.data().data() + i * k;
        double* crow = c.data().data() + i * m;
        for (std::size_t p = 0; p < k; ++p) {
            const double av = arow[p];
            if (av == 0.0) continue;
            const double* brow = b.data().data() + p * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

Matrix matmul_bt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw ConfigError("matmul_bt: inner dimension mismatch " + std::to_string(a.cols()) +
                          " vs " + std::to_string(b.cols()));
    Matrix c(a.rows(), b.rows());
    const std::size_t n = a.rows(), k = a.cols(), m = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a.data().data() + i * k;
        double* crow = c.data().data() + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            const double* brow = b.data().data() + j * k;
            double acc = 0.0;
            for (std::size_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
            crow[j] = acc;
        }
    }
    return c;
}

Matrix matmul_at(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw ConfigError("matmul_at: inner dimension mismatch " + std::to_string(a.rows()) +
                          " vs " + std::to_string(b.rows()));
    Matrix c(a.cols(), b.cols());
    const std::size_t k = a.rows(), n = a.cols(), m = b.cols();
    for (std::size_t p = 0; p < k; ++p) {
        const double* arow = a.data().data() + p * n;
        const double* brow = b.data().data() + p * m;
        for (std::size_t i = 0; i < n; ++i) {
            const double av = arow[i];
            if (av == 0.0) continue;
            double* crow = c.data().data() + i * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

std::vector<double> column_means(const Matrix& m) {
    std::vector<double> mu(m.cols(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) mu[c] += row[c];
    }
    const double inv = m.rows() ? 1.0 / static_cast<double>(m.rows()) : 0.0;
    for (double& v : mu) v *= inv;
    return mu;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.cols() != b.cols()) throw ConfigError("vstack: column count mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    std::memcpy(out.data().data(), a.data().data(), a.size() * sizeof(double));
    std::memcpy(out.data().data() + a.size(), b.data().data(), b.size() * sizeof(double));
    return out;
}

} // namespace adlab
