#include "metrics/dependence.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace adlab::metrics {

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ConfigError("pearson: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw ConfigError("pearson: need n >= 2");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DegenerateInputError("pearson: zero variance input");
    double r = sxy / std::sqrt(sxx * syy);
    if (r > 1.0) r = 1.0;
    if (r < -1.0) r = -1.0;
    return r;
}

namespace {

inline double row_distance(const Matrix& m, std::size_t i, std::size_t j) {
    const double* a = m.data().data() + i * m.cols();
    const double* b = m.data().data() + j * m.cols();
    double acc = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const double d = a[c] - b[c];
        acc += d * d;
    }
    return std::sqrt(acc);
}

} // namespace

double dcorr(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows()) throw ConfigError("dcorr: row count mismatch");
    const std::size_t n = x.rows();
    if (n < 4) throw ConfigError("dcorr: need n >= 4");

    // Pass 1: row means and grand means of the distance matrices.
    std::vector<double> arow(n, 0.0), brow(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = row_distance(x, i, j);
            const double b = row_distance(y, i, j);
            arow[i] += a;
            arow[j] += a;
            brow[i] += b;
            brow[j] += b;
        }
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    double agrand = 0.0, bgrand = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        arow[i] *= inv_n;
        brow[i] *= inv_n;
        agrand += arow[i];
        bgrand += brow[i];
    }
    agrand *= inv_n;
    bgrand *= inv_n;

    // Pass 2: accumulate the double-centered products, diagonal included
    // (V-statistic). The loops treat x and y identically so dcorr(x,y)
    // equals dcorr(y,x) exactly.
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        {
            const double ac = -2.0 * arow[i] + agrand; // a_ii = 0
            const double bc = -2.0 * brow[i] + bgrand;
            sab += ac * bc;
            saa += ac * ac;
            sbb += bc * bc;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const double ac = row_distance(x, i, j) - arow[i] - arow[j] + agrand;
            const double bc = row_distance(y, i, j) - brow[i] - brow[j] + bgrand;
            sab += 2.0 * ac * bc;
            saa += 2.0 * ac * ac;
            sbb += 2.0 * bc * bc;
        }
    }
    // Common 1/n² factors cancel in the ratio.
    if (saa <= 0.0 || sbb <= 0.0) return 0.0;
    double r2 = sab / std::sqrt(saa * sbb);
    if (r2 < 0.0) r2 = 0.0; // round-off guard
    double r = std::sqrt(r2);
    if (r > 1.0) r = 1.0;
    return r;
}

double dcorr(std::span<const double> x, std::span<const double> y) {
    Matrix mx(x.size(), 1), my(y.size(), 1);
    for (std::size_t i = 0; i < x.size(); ++i) mx(i, 0) = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) my(i, 0) = y[i];
    return dcorr(mx, my);
}

Matrix covariance_matrix(const Matrix& z) {
    const std::size_t n = z.rows(), d = z.cols();
    if (n < 2) throw ConfigError("covariance_matrix: need n >= 2");
    const std::vector<double> mu = column_means(z);
    Matrix cov(d, d);
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = z.row(r);
        for (std::size_t i = 0; i < d; ++i) {
            const double di = row[i] - mu[i];
            for (std::size_t j = i; j < d; ++j) cov(i, j) += di * (row[j] - mu[j]);
        }
    }
    const double inv = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            cov(i, j) *= inv;
            cov(j, i) = cov(i, j);
        }
    return cov;
}

double mean_abs_offdiag_pearson(const Matrix& z, std::size_t* degenerate_out) {
    const std::size_t d = z.cols();
    if (d < 2) throw ConfigError("mean_abs_offdiag_pearson: need d >= 2");
    std::size_t degenerate = 0;
    double acc = 0.0;
    std::vector<std::vector<double>> cols(d);
    for (std::size_t i = 0; i < d; ++i) cols[i] = z.column(i);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            try {
                acc += std::abs(pearson(cols[i], cols[j]));
            } catch (const DegenerateInputError&) {
                ++degenerate; // collapsed dimension: count as 0 and flag
            }
        }
    }
    if (degenerate_out) *degenerate_out = degenerate;
    return acc / (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
}

CorrSummary corr_summary(const Matrix& z) {
    const std::size_t n = z.rows(), d = z.cols();
    if (n < 4) throw ConfigError("corr_summary: need n >= 4");
    if (d < 2) throw ConfigError("corr_summary: need d >= 2");
    CorrSummary s;
    s.mean_abs_offdiag_pearson = mean_abs_offdiag_pearson(z, &s.degenerate_columns);
    s.per_dim_dcorr.resize(d);
    std::vector<std::size_t> rest(d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) rest[k++] = j;
        const Matrix xi = z.select_columns({i});
        const Matrix others = z.select_columns(rest);
        s.per_dim_dcorr[i] = dcorr(xi, others);
        s.mean_sq_dcorr += s.per_dim_dcorr[i] * s.per_dim_dcorr[i];
    }
    s.mean_sq_dcorr /= static_cast<double>(d);
    return s;
}

Matrix pearson_matrix(const Matrix& z) {
    const std::size_t d = z.cols();
    Matrix out(d, d);
    std::vector<std::vector<double>> cols(d);
    for (std::size_t i = 0; i < d; ++i) cols[i] = z.column(i);
    for (std::size_t i = 0; i < d; ++i) {
        out(i, i) = 1.0;
        for (std::size_t j = i + 1; j < d; ++j) {
            double r = 0.0;
            try {
                r = pearson(cols[i], cols[j]);
            } catch (const DegenerateInputError&) {
                r = 0.0;
            }
            out(i, j) = r;
            out(j, i) = r;
        }
    }
    return out;
}

Matrix dcorr_matrix(const Matrix& z) {
    const std::size_t d = z.cols();
    Matrix out(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Matrix xi = z.select_columns({i});
        out(i, i) = dcorr(xi, xi);
        for (std::size_t j = i + 1; j < d; ++j) {
            const Matrix xj = z.select_columns({j});
            const double r = dcorr(xi, xj);
            out(i, j) = r;
            out(j, i) = r;
        }
    }
    return out;
}

} // namespace adlab::metrics
