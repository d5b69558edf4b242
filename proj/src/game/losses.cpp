#include "game/losses.hpp"

#include <cmath>

#include "core/error.hpp"

namespace adlab::game {

namespace {

inline double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

} // namespace

double predictor_loss(const Matrix& z_eff, const Matrix& zhat, Distance distance) {
    require_same_shape(z_eff, zhat, "predictor_loss");
    const double scale = 1.0 / (static_cast<double>(z_eff.rows()) * static_cast<double>(z_eff.cols()));
    double acc = 0.0;
    if (distance == Distance::l2_squared) {
        for (std::size_t i = 0; i < z_eff.size(); ++i) {
            const double dlt = z_eff.data()[i] - zhat.data()[i];
            acc += dlt * dlt;
        }
    } else {
        for (std::size_t i = 0; i < z_eff.size(); ++i)
            acc += std::abs(z_eff.data()[i] - zhat.data()[i]);
    }
    return acc * scale;
}

Matrix predictor_loss_grad(const Matrix& z_eff, const Matrix& zhat, Distance distance) {
    require_same_shape(z_eff, zhat, "predictor_loss_grad");
    const double scale = 1.0 / (static_cast<double>(z_eff.rows()) * static_cast<double>(z_eff.cols()));
    Matrix d(zhat.rows(), zhat.cols());
    if (distance == Distance::l2_squared) {
        for (std::size_t i = 0; i < zhat.size(); ++i)
            d.data()[i] = 2.0 * scale * (zhat.data()[i] - z_eff.data()[i]);
    } else {
        for (std::size_t i = 0; i < zhat.size(); ++i)
            d.data()[i] = scale * sgn(zhat.data()[i] - z_eff.data()[i]);
    }
    return d;
}

AdversarialGrad encoder_adversarial_loss_grad(const Matrix& z_eff, const Matrix& zhat,
                                              Formulation formulation, Distance distance,
                                              double alpha) {
    require_same_shape(z_eff, zhat, "encoder_adversarial_loss");
    const std::size_t n = z_eff.rows(), d = z_eff.cols();
    const double inv_nd = 1.0 / (static_cast<double>(n) * static_cast<double>(d));
    AdversarialGrad out;
    out.dz = Matrix(n, d);
    out.dzhat = Matrix(n, d);

    if (formulation == Formulation::standardized || formulation == Formulation::raw) {
        // 1 − MSE (standardized) or −MSE (raw): identical gradients.
        double mse = 0.0;
        for (std::size_t i = 0; i < z_eff.size(); ++i) {
            const double dlt = z_eff.data()[i] - zhat.data()[i];
            mse += dlt * dlt;
            out.dz.data()[i] = -2.0 * inv_nd * dlt;
            out.dzhat.data()[i] = 2.0 * inv_nd * dlt;
        }
        mse *= inv_nd;
        out.value = (formulation == Formulation::standardized) ? 1.0 - mse : -mse;
        return out;
    }

    // Margin hinge per sample on the per-dimension-normalized distance.
    const double inv_d = 1.0 / static_cast<double>(d);
    const double inv_n = 1.0 / static_cast<double>(n);
    double total = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        const auto zrow = z_eff.row(r);
        const auto hrow = zhat.row(r);
        double dist = 0.0;
        if (distance == Distance::l2_squared) {
            for (std::size_t c = 0; c < d; ++c) {
                const double dlt = zrow[c] - hrow[c];
                dist += dlt * dlt;
            }
        } else {
            for (std::size_t c = 0; c < d; ++c) dist += std::abs(zrow[c] - hrow[c]);
        }
        dist *= inv_d;
        const double hinge = alpha - dist;
        if (hinge <= 0.0) continue; // clamped region: zero gradient
        total += hinge;
        auto dzr = out.dz.row(r);
        auto dhr = out.dzhat.row(r);
        if (distance == Distance::l2_squared) {
            for (std::size_t c = 0; c < d; ++c) {
                const double dlt = zrow[c] - hrow[c];
                dzr[c] = -2.0 * inv_n * inv_d * dlt;
                dhr[c] = 2.0 * inv_n * inv_d * dlt;
            }
        } else {
            for (std::size_t c = 0; c < d; ++c) {
                const double s = sgn(zrow[c] - hrow[c]);
                dzr[c] = -inv_n * inv_d * s;
                dhr[c] = inv_n * inv_d * s;
            }
        }
    }
    out.value = total * inv_n;
    return out;
}

double encoder_adversarial_loss(const Matrix& z_eff, const Matrix& zhat, Formulation formulation,
                                Distance distance, double alpha) {
    return encoder_adversarial_loss_grad(z_eff, zhat, formulation, distance, alpha).value;
}

double cross_entropy_grad(const Matrix& logits, const std::vector<int>& labels, Matrix& dlogits) {
    const std::size_t n = logits.rows(), c = logits.cols();
    if (labels.size() != n) throw ConfigError("cross_entropy: label count mismatch");
    dlogits = Matrix(n, c);
    const double inv_n = 1.0 / static_cast<double>(n);
    double loss = 0.0;
    std::vector<double> p(c);
    for (std::size_t r = 0; r < n; ++r) {
        const int y = labels[r];
        if (y < 0 || static_cast<std::size_t>(y) >= c)
            throw ConfigError("cross_entropy: label out of range");
        const auto row = logits.row(r);
        double mx = row[0];
        for (std::size_t j = 1; j < c; ++j) mx = std::max(mx, row[j]);
        double z = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            p[j] = std::exp(row[j] - mx);
            z += p[j];
        }
        loss -= std::log(p[static_cast<std::size_t>(y)] / z);
        auto drow = dlogits.row(r);
        for (std::size_t j = 0; j < c; ++j)
            drow[j] = inv_n * (p[j] / z - (static_cast<int>(j) == y ? 1.0 : 0.0));
    }
    return loss * inv_n;
}

double cross_entropy(const Matrix& logits, const std::vector<int>& labels) {
    Matrix scratch;
    return cross_entropy_grad(logits, labels, scratch);
}

double invariance_mse_grad(const Matrix& za, const Matrix& zb, Matrix& dza, Matrix& dzb) {
    require_same_shape(za, zb, "invariance_mse");
    const double scale = 1.0 / (static_cast<double>(za.rows()) * static_cast<double>(za.cols()));
    dza = Matrix(za.rows(), za.cols());
    dzb = Matrix(za.rows(), za.cols());
    double acc = 0.0;
    for (std::size_t i = 0; i < za.size(); ++i) {
        const double dlt = za.data()[i] - zb.data()[i];
        acc += dlt * dlt;
        dza.data()[i] = 2.0 * scale * dlt;
        dzb.data()[i] = -2.0 * scale * dlt;
    }
    return acc * scale;
}

} // namespace adlab::game
