#ifndef ADLAB_APPS_SSL_HPP
#define ADLAB_APPS_SSL_HPP

#include <cstdint>

#include "game/train.hpp"
#include "synth/shapes.hpp"

namespace adlab::apps {

// Label-free training on the shapes world: two views of each sample are
// independent noise draws around the same attribute embedding, the
// encoder minimizes the view-invariance MSE on standardized
// representations plus λ/2 of the adversarial term on each view.
struct SslConfig {
    std::size_t n_per_class = 2000;
    double noise_sigma = 0.1;
    double intensity = 0.3;
    std::size_t feature_dim = 16;
    std::size_t embed_dim = 16;
    std::size_t hidden = 64;
    game::Formulation formulation = game::Formulation::standardized;
    game::Distance distance = game::Distance::l2_squared;
    double alpha = 0.4;   // only used by the margin variant
    double lambda = 5.0;  // 0 = invariance-only control
    std::size_t k = 1;
    std::size_t bank_hidden = 32;
    std::size_t steps = 2000;
    std::size_t batch = 256;
    double encoder_lr = 0.02;
    double predictor_lr = 0.06;
    double momentum = 0.9;
    double weight_decay = 1e-4;
    std::size_t warmup = 100;
    std::size_t knn_k = 20;
    std::uint64_t seed = 1;
};

struct SslOutcome {
    game::RunLog log;
    double shape_knn = 0.0;  // fresh train-distribution queries
    double color_knn = 0.0;
    double mean_sq_dcorr = 0.0;
    bool aborted = false;
};

SslOutcome train_ssl_toy(const SslConfig& cfg);

} // namespace adlab::apps

#endif
