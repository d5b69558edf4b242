#ifndef ADLAB_APPS_PICA_HPP
#define ADLAB_APPS_PICA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "game/train.hpp"

namespace adlab::apps {

// Tied-weight linear autoencoder: z = x·W, x̂ = z·Wᵀ, one shared W (l×d).
class TiedLinearAe : public game::EncoderModel {
public:
    TiedLinearAe(std::size_t in_dim, std::size_t code_dim, Rng& rng);

    Matrix forward(const Matrix& x, int slot = 0) override;
    void backward(const Matrix& dz, int slot = 0) override;
    std::vector<nn::ParamRef> param_refs() override;
    void zero_grad() override;

    // Decoder-path reconstruction: adds coef·(1/n)·Σ‖x − z·Wᵀ‖² gradients
    // to the weight grad and to dz_accum; returns the loss term.
    double recon_loss_grad(const Matrix& x, const Matrix& z, double coef, Matrix& dz_accum);
    double recon_mse(const Matrix& x, const Matrix& z) const;

    const Matrix& w() const { return w_; }

private:
    Matrix w_;      // l×d
    Matrix w_grad_;
    Matrix cached_x_[2];
};

// Squared off-diagonal covariance penalty on the batch representation;
// adds the gradient to dz_accum and returns coef·Σ_{i≠j} Cov(z_i,z_j)².
double covariance_penalty_grad(const Matrix& z, double coef, Matrix& dz_accum);

enum class PicaMethod { pca_svd, pca_covreg, pca_linear_pred, pica_nonlinear, nlpica };

PicaMethod pica_method_from_string(const std::string& s);
const char* to_string(PicaMethod m);

struct PicaConfig {
    PicaMethod method = PicaMethod::pica_nonlinear;
    std::size_t steps = 5000;
    std::size_t batch = 512;
    std::size_t k = 16;
    double encoder_lr = 5e-3;
    double predictor_lr = 2e-2;
    double lambda = 1.0;
    double recon_coef = 0.02;
    std::size_t bank_hidden = 32;
    std::size_t nlpica_hidden = 64;
    std::size_t eval_n = 100000;
    std::size_t dcorr_n = 4096;   // dcorr subsample of the evaluation set
    std::size_t scatter_n = 2000;
    std::uint64_t seed = 7;
};

struct PicaReport {
    std::string method;
    Matrix w_abs_normalized;       // l×d, |columns| scaled to unit norm; empty for nlpica
    double explained_variance = 0.0;
    double reconstruction_mse = 0.0;
    double dcorr_z1_z2 = 0.0;
    game::RunLog log;              // empty for pca_svd
    Matrix scatter;                // rows of (z1, z2, v1, v2)
    bool aborted = false;
};

PicaReport run_pica(const PicaConfig& cfg);

// Column-pattern check used by reports and tests: normalizes |W| columns,
// greedily matches them to the target columns by cosine similarity, and
// returns the max per-entry deviation. PCA components are sign-ambiguous,
// so everything happens on absolute values.
double pattern_deviation(const Matrix& w, const Matrix& target);

} // namespace adlab::apps

#endif
