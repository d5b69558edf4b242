#ifndef ADLAB_CORE_MATRIX_HPP
#define ADLAB_CORE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace adlab {

// Dense row-major matrix of doubles. Rows are samples, columns are
// dimensions everywhere in this codebase.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    void fill(double v) { data_.assign(data_.size(), v); }

    // Columns `keep` of *this, in the given order.
    Matrix select_columns(const std::vector<std::size_t>& keep) const;
    std::vector<double> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const double> v);

    bool all_finite() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// C = A * B,  A: n×k, B: k×m.
Matrix matmul(const Matrix& a, const Matrix& b);
// C = A * Bᵀ, A: n×k, B: m×k.
Matrix matmul_bt(const Matrix& a, const Matrix& b);
// C = Aᵀ * B, A: k×n, B: k×m.
Matrix matmul_at(const Matrix& a, const Matrix& b);

std::vector<double> column_means(const Matrix& m);
// Appends the rows of `b` below the rows of `a`; column counts must match.
Matrix vstack(const Matrix& a, const Matrix& b);

void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

} // namespace adlab

#endif
