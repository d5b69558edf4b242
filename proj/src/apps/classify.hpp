#ifndef ADLAB_APPS_CLASSIFY_HPP
#define ADLAB_APPS_CLASSIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "game/train.hpp"
#include "synth/shapes.hpp"

namespace adlab::apps {

struct ClassifyConfig {
    // Dataset.
    std::size_t n_per_class = 2000;
    double noise_sigma = 0.1;
    double intensity = 0.3;
    std::size_t feature_dim = 16; // m
    // Encoder / head.
    std::size_t embed_dim = 16;   // d
    std::size_t hidden = 64;
    // Adversarial game.
    bool use_admin = true;        // false: λ = 0 baseline, same loop
    game::Formulation formulation = game::Formulation::margin;
    game::Distance distance = game::Distance::l1;
    double alpha = 0.4;
    double lambda = 5.0;
    std::size_t k = 1;
    std::size_t bank_hidden = 32;
    // Optimization.
    std::size_t steps = 3000;
    std::size_t batch = 256;
    double encoder_lr = 0.02;
    double predictor_lr = 0.06;
    nn::OptimizerKind predictor_opt = nn::OptimizerKind::sgd_momentum;
    double momentum = 0.9;
    double weight_decay = 1e-4;
    std::size_t warmup = 100;
    // Evaluation.
    std::size_t knn_k = 20;
    std::size_t dcorr_interval = 0; // terminal summary always computed
    std::uint64_t seed = 1;
};

struct ClassifyOutcome {
    game::RunLog log;
    double train_accuracy = 0.0;       // argmax over the train split
    double shape_knn = 0.0;            // heldout queries, train-split index
    double color_knn = 0.0;
    double heldout_as_class0 = 0.0;    // fraction voted into (square, red)
    double mean_sq_dcorr = 0.0;        // terminal, train-distribution batch
    double final_mean_norm = 0.0;
    bool aborted = false;
};

ClassifyOutcome train_classifier(const ClassifyConfig& cfg);

struct MarginSweepRow {
    double alpha = 0.0;
    double secondary_accuracy = 0.0;   // shape kNN on heldout queries
    double mean_sq_dcorr = 0.0;
    bool aborted = false;
};

// One classification run per margin at a fixed seed. α = 0 disables the
// adversarial pressure (λ·0 path) and reproduces the baseline exactly.
// Runs fan out over worker threads, capped by max_threads (0 = serial);
// rows come back in α order regardless.
std::vector<MarginSweepRow> sweep_margin(const std::vector<double>& alphas,
                                         const ClassifyConfig& cfg, std::size_t max_threads);

struct AblationRow {
    std::string name;                  // standardized | margin | neither
    double shape_knn = 0.0;
    double color_knn = 0.0;
    double mean_sq_dcorr = 0.0;
    double final_mean_norm = 0.0;
    bool aborted = false;
};

// The three adversarial-loss configurations on the same dataset:
// standardized MSE (k = 2), margin l1 (α per cfg), and unbounded raw
// maximization.
std::vector<AblationRow> ablate_formulations(const ClassifyConfig& cfg);

} // namespace adlab::apps

#endif
