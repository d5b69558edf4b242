#include "apps/pica.hpp"

#include <cmath>

#include "apps/pca.hpp"
#include "core/error.hpp"
#include "metrics/dependence.hpp"
#include "synth/generators.hpp"

namespace adlab::apps {

TiedLinearAe::TiedLinearAe(std::size_t in_dim, std::size_t code_dim, Rng& rng)
    : w_(in_dim, code_dim), w_grad_(in_dim, code_dim) {
    const double limit = std::sqrt(6.0 / static_cast<double>(in_dim + code_dim));
    for (double& v : w_.data()) v = rng.uniform(-limit, limit);
}

Matrix TiedLinearAe::forward(const Matrix& x, int slot) {
    cached_x_[slot] = x;
    return matmul(x, w_);
}

void TiedLinearAe::backward(const Matrix& dz, int slot) {
    w_grad_ += matmul_at(cached_x_[slot], dz);
}

std::vector<nn::ParamRef> TiedLinearAe::param_refs() {
    return {{w_.data().data(), w_grad_.data().data(), w_.size()}};
}

void TiedLinearAe::zero_grad() { w_grad_.fill(0.0); }

double TiedLinearAe::recon_loss_grad(const Matrix& x, const Matrix& z, double coef,
                                     Matrix& dz_accum) {
    const std::size_t n = x.rows();
    Matrix xhat = matmul_bt(z, w_);
    double loss = 0.0;
    Matrix g(n, x.cols()); // dL/dx̂
    const double scale = 2.0 * coef / static_cast<double>(n);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double diff = xhat.data()[i] - x.data()[i];
        loss += diff * diff;
        g.data()[i] = scale * diff;
    }
    loss *= coef / static_cast<double>(n);
    dz_accum += matmul(g, w_);          // decoder input path
    w_grad_ += matmul_at(g, z);         // decoder weight path
    return loss;
}

double TiedLinearAe::recon_mse(const Matrix& x, const Matrix& z) const {
    const Matrix xhat = matmul_bt(z, w_);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double diff = xhat.data()[i] - x.data()[i];
        acc += diff * diff;
    }
    return acc / static_cast<double>(x.rows());
}

double covariance_penalty_grad(const Matrix& z, double coef, Matrix& dz_accum) {
    const std::size_t n = z.rows(), d = z.cols();
    if (n < 2) throw ConfigError("covariance_penalty: need n >= 2");
    const std::vector<double> mu = column_means(z);
    Matrix centered = z;
    for (std::size_t r = 0; r < n; ++r) {
        auto row = centered.row(r);
        for (std::size_t c = 0; c < d; ++c) row[c] -= mu[c];
    }
    const double s = 1.0 / static_cast<double>(n - 1);
    Matrix cov = matmul_at(centered, centered);
    cov *= s;
    double penalty = 0.0;
    Matrix g(d, d); // dP/dC, zero diagonal
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            penalty += cov(i, j) * cov(i, j);
            g(i, j) = 2.0 * coef * cov(i, j);
        }
    // dP/dZ = 2·s·Z̃·G for symmetric G; the centering projection is a
    // no-op because the columns of Z̃·G are zero-mean.
    Matrix dz = matmul(centered, g);
    dz *= 2.0 * s;
    dz_accum += dz;
    return coef * penalty;
}

PicaMethod pica_method_from_string(const std::string& s) {
    if (s == "pca-svd" || s == "pca_svd") return PicaMethod::pca_svd;
    if (s == "pca-covreg" || s == "pca_covreg") return PicaMethod::pca_covreg;
    if (s == "pca-linear-pred" || s == "pca_linear_pred") return PicaMethod::pca_linear_pred;
    if (s == "pica-nonlinear" || s == "pica_nonlinear") return PicaMethod::pica_nonlinear;
    if (s == "nlpica") return PicaMethod::nlpica;
    throw ConfigError("unknown pica method: " + s);
}

const char* to_string(PicaMethod m) {
    switch (m) {
    case PicaMethod::pca_svd: return "pca_svd";
    case PicaMethod::pca_covreg: return "pca_covreg";
    case PicaMethod::pca_linear_pred: return "pca_linear_pred";
    case PicaMethod::pica_nonlinear: return "pica_nonlinear";
    case PicaMethod::nlpica: return "nlpica";
    }
    return "pica_nonlinear";
}

namespace {

// Reconstruction through a trainable nonlinear decoder (the NLPICA task).
class DecoderTask : public game::TaskModel {
public:
    DecoderTask(nn::Mlp decoder, double coef) : decoder_(std::move(decoder)), coef_(coef) {}

    double loss_and_grad(const game::Batch& batch, const Matrix& z, Matrix& dz) override {
        nn::MlpCache cache;
        const Matrix xhat = decoder_.forward_cached(z, cache);
        const std::size_t n = z.rows();
        Matrix g(xhat.rows(), xhat.cols());
        const double scale = 2.0 * coef_ / static_cast<double>(n);
        double loss = 0.0;
        for (std::size_t i = 0; i < xhat.size(); ++i) {
            const double diff = xhat.data()[i] - batch.x.data()[i];
            loss += diff * diff;
            g.data()[i] = scale * diff;
        }
        dz = decoder_.backward(cache, g);
        return loss * coef_ / static_cast<double>(n);
    }

    std::vector<nn::ParamRef> param_refs() override { return decoder_.param_refs(); }
    void zero_grad() override { decoder_.zero_grad(); }

    nn::Mlp& decoder() { return decoder_; }

private:
    nn::Mlp decoder_;
    double coef_;
};

// Tied reconstruction plus optional covariance penalty.
class LinearAeTask : public game::TaskModel {
public:
    LinearAeTask(TiedLinearAe* ae, double recon_coef, double cov_coef)
        : ae_(ae), recon_coef_(recon_coef), cov_coef_(cov_coef) {}

    double loss_and_grad(const game::Batch& batch, const Matrix& z, Matrix& dz) override {
        dz = Matrix(z.rows(), z.cols());
        double loss = ae_->recon_loss_grad(batch.x, z, recon_coef_, dz);
        if (cov_coef_ > 0.0) loss += covariance_penalty_grad(z, cov_coef_, dz);
        return loss;
    }
    // The shared W is already owned by the encoder side; no extra params.

private:
    TiedLinearAe* ae_;
    double recon_coef_;
    double cov_coef_;
};

Matrix abs_normalized_columns(const Matrix& w) {
    Matrix out = w;
    for (std::size_t c = 0; c < w.cols(); ++c) {
        double norm = 0.0;
        for (std::size_t r = 0; r < w.rows(); ++r) norm += w(r, c) * w(r, c);
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < w.rows(); ++r)
            out(r, c) = norm > 0.0 ? std::abs(w(r, c)) / norm : 0.0;
    }
    return out;
}

double column_variance_sum(const Matrix& z) {
    const Matrix cov = metrics::covariance_matrix(z);
    double acc = 0.0;
    for (std::size_t i = 0; i < cov.rows(); ++i) acc += cov(i, i);
    return acc;
}

Matrix make_scatter(const Matrix& z, const Matrix& latents, std::size_t n) {
    n = std::min({n, z.rows(), latents.rows()});
    Matrix s(n, 4);
    for (std::size_t i = 0; i < n; ++i) {
        s(i, 0) = z(i, 0);
        s(i, 1) = z(i, 1);
        s(i, 2) = latents(i, 0);
        s(i, 3) = latents(i, 1);
    }
    return s;
}

} // namespace

PicaReport run_pica(const PicaConfig& cfg) {
    PicaReport report;
    report.method = to_string(cfg.method);

    // Fresh evaluation set, disjoint stream from training batches.
    auto [eval_latents, eval_obs] = synth::gen_pica_observations(cfg.eval_n, cfg.seed ^ 0x9E37u);

    if (cfg.method == PicaMethod::pca_svd) {
        const PcaResult pca = pca_svd(eval_obs, 2);
        const Matrix z = matmul(eval_obs, pca.w);
        report.w_abs_normalized = abs_normalized_columns(pca.w);
        report.explained_variance = pca.explained_variance;
        // Tied linear reconstruction error of the PCA projection.
        double acc = 0.0;
        const Matrix xhat = matmul_bt(z, pca.w);
        for (std::size_t i = 0; i < eval_obs.size(); ++i) {
            const double diff = xhat.data()[i] - eval_obs.data()[i];
            acc += diff * diff;
        }
        report.reconstruction_mse = acc / static_cast<double>(eval_obs.rows());
        const std::size_t nd = std::min(cfg.dcorr_n, z.rows());
        Matrix z1(nd, 1), z2(nd, 1);
        for (std::size_t i = 0; i < nd; ++i) {
            z1(i, 0) = z(i, 0);
            z2(i, 0) = z(i, 1);
        }
        report.dcorr_z1_z2 = metrics::dcorr(z1, z2);
        report.scatter = make_scatter(z, eval_latents, cfg.scatter_n);
        return report;
    }

    game::AdminConfig game_cfg;
    game_cfg.formulation = game::Formulation::standardized;
    game_cfg.distance = game::Distance::l2_squared;
    game_cfg.lambda = (cfg.method == PicaMethod::pca_covreg) ? 0.0 : cfg.lambda;
    game_cfg.k = cfg.k;
    game_cfg.steps = cfg.steps;
    game_cfg.batch = cfg.batch;
    game_cfg.dim = 2;
    game_cfg.seed = cfg.seed;
    game_cfg.encoder_opt.kind = nn::OptimizerKind::adam;
    game_cfg.predictor_opt.kind = nn::OptimizerKind::adam;
    game_cfg.encoder_lr = cfg.encoder_lr;
    game_cfg.predictor_lr = cfg.predictor_lr;
    game_cfg.schedule = nn::ScheduleKind::constant;
    game_cfg.dcorr_interval = 0; // terminal summary only; dcorr is O(n²)
    game_cfg.eval_batch = 2048;

    const game::BatchFn data = [](Rng& rng, std::size_t n) {
        game::Batch b;
        const double s3 = std::sqrt(3.0);
        b.x = Matrix(n, 3);
        for (std::size_t i = 0; i < n; ++i) {
            const double v1 = rng.uniform(-s3, s3);
            const double v2 = rng.uniform(-s3, s3);
            b.x(i, 0) = 5.0 * v1;
            b.x(i, 1) = 3.0 * std::cos(2.0 * M_PI * v1 / s3);
            b.x(i, 2) = v2;
        }
        return b;
    };

    Rng bank_rng(cfg.seed, streams::kBankInit);
    game::PredictorBank::Arch arch;
    if (cfg.method == PicaMethod::pca_linear_pred || cfg.method == PicaMethod::pca_covreg) {
        arch.hidden = 0;
        arch.depth = 1;
    } else {
        arch.hidden = cfg.bank_hidden;
        arch.depth = 2;
    }
    game::PredictorBank bank(2, arch, bank_rng);

    Rng enc_rng(cfg.seed, streams::kEncoderInit);
    if (cfg.method == PicaMethod::nlpica) {
        nn::Mlp enc_net =
            nn::Mlp::make({3, cfg.nlpica_hidden, 2}, nn::Activation::gelu, enc_rng);
        game::MlpEncoder encoder(std::move(enc_net));
        Rng dec_rng(cfg.seed, streams::kTaskInit);
        DecoderTask task(nn::Mlp::make({2, cfg.nlpica_hidden, 3}, nn::Activation::gelu, dec_rng),
                         cfg.recon_coef);
        report.log = game::admin_train(encoder, bank, data, &task, game_cfg);
        report.aborted = report.log.aborted;
        if (!report.aborted) {
            const Matrix z = encoder.forward(eval_obs);
            report.explained_variance = column_variance_sum(z);
            const Matrix xhat = task.decoder().forward(z);
            double acc = 0.0;
            for (std::size_t i = 0; i < eval_obs.size(); ++i) {
                const double diff = xhat.data()[i] - eval_obs.data()[i];
                acc += diff * diff;
            }
            report.reconstruction_mse = acc / static_cast<double>(eval_obs.rows());
            const std::size_t nd = std::min(cfg.dcorr_n, z.rows());
            Matrix z1(nd, 1), z2(nd, 1);
            for (std::size_t i = 0; i < nd; ++i) {
                z1(i, 0) = z(i, 0);
                z2(i, 0) = z(i, 1);
            }
            report.dcorr_z1_z2 = metrics::dcorr(z1, z2);
            report.scatter = make_scatter(z, eval_latents, cfg.scatter_n);
        }
        return report;
    }

    TiedLinearAe ae(3, 2, enc_rng);
    LinearAeTask task(&ae, cfg.recon_coef,
                      cfg.method == PicaMethod::pca_covreg ? 1.0 : 0.0);
    report.log = game::admin_train(ae, bank, data, &task, game_cfg);
    report.aborted = report.log.aborted;
    if (!report.aborted) {
        const Matrix z = ae.forward(eval_obs);
        report.w_abs_normalized = abs_normalized_columns(ae.w());
        report.explained_variance = column_variance_sum(z);
        report.reconstruction_mse = ae.recon_mse(eval_obs, z);
        const std::size_t nd = std::min(cfg.dcorr_n, z.rows());
        Matrix z1(nd, 1), z2(nd, 1);
        for (std::size_t i = 0; i < nd; ++i) {
            z1(i, 0) = z(i, 0);
            z2(i, 0) = z(i, 1);
        }
        report.dcorr_z1_z2 = metrics::dcorr(z1, z2);
        report.scatter = make_scatter(z, eval_latents, cfg.scatter_n);
    }
    return report;
}

double pattern_deviation(const Matrix& w, const Matrix& target) {
    if (w.rows() != target.rows() || w.cols() != target.cols())
        throw ConfigError("pattern_deviation: shape mismatch");
    const Matrix a = abs_normalized_columns(w);
    const Matrix b = abs_normalized_columns(target);
    const std::size_t d = a.cols();
    std::vector<bool> used(d, false);
    double worst = 0.0;
    // Greedy |cosine| matching of learned columns onto target columns.
    for (std::size_t ca = 0; ca < d; ++ca) {
        double best_cos = -1.0;
        std::size_t best_cb = 0;
        for (std::size_t cb = 0; cb < d; ++cb) {
            if (used[cb]) continue;
            double dot = 0.0;
            for (std::size_t r = 0; r < a.rows(); ++r) dot += a(r, ca) * b(r, cb);
            if (dot > best_cos) {
                best_cos = dot;
                best_cb = cb;
            }
        }
        used[best_cb] = true;
        for (std::size_t r = 0; r < a.rows(); ++r)
            worst = std::max(worst, std::abs(a(r, ca) - b(r, best_cb)));
    }
    return worst;
}

} // namespace adlab::apps
