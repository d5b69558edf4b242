#ifndef ADLAB_GAME_LOSSES_HPP
#define ADLAB_GAME_LOSSES_HPP

#include <vector>

#include "core/matrix.hpp"
#include "game/config.hpp"

namespace adlab::game {

// Reconstruction errors are normalized per dimension (divide by d), so the
// standardized game equilibrates at a loss of 1 regardless of d.

// Mean over samples of dist(z, ẑ)/d. l2_squared: squared error; l1:
// absolute error.
double predictor_loss(const Matrix& z_eff, const Matrix& zhat, Distance distance);
// dL/dẑ for the predictor update (z treated as data).
Matrix predictor_loss_grad(const Matrix& z_eff, const Matrix& zhat, Distance distance);

struct AdversarialGrad {
    double value = 0.0;
    Matrix dz;    // direct path into z_eff
    Matrix dzhat; // path through the bank output
};

// Encoder-side objective.
//   standardized: 1 − mean per-dim squared error (z_eff must be standardized).
//   margin:       mean over samples of max(0, α − dist_i), dist per the
//                 configured distance on the per-dim-normalized error
//                 (z_eff raw).
//   raw:          −mean per-dim squared error (ablation).
AdversarialGrad encoder_adversarial_loss_grad(const Matrix& z_eff, const Matrix& zhat,
                                              Formulation formulation, Distance distance,
                                              double alpha);
double encoder_adversarial_loss(const Matrix& z_eff, const Matrix& zhat,
                                Formulation formulation, Distance distance, double alpha);

// Softmax cross-entropy, mean over samples. Writes dL/dlogits.
double cross_entropy_grad(const Matrix& logits, const std::vector<int>& labels,
                          Matrix& dlogits);
double cross_entropy(const Matrix& logits, const std::vector<int>& labels);

// Mean over samples and dimensions of (za − zb)²; view-invariance term.
double invariance_mse_grad(const Matrix& za, const Matrix& zb, Matrix& dza, Matrix& dzb);

} // namespace adlab::game

#endif
