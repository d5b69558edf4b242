#ifndef ADLAB_APPS_CONVERGE_HPP
#define ADLAB_APPS_CONVERGE_HPP

#include <cstdint>

#include "game/train.hpp"

namespace adlab::apps {

// Convergence benchmark of the standardized game: correlated Gaussian
// inputs, MLP encoder, fresh batch every update. At equilibrium the
// per-dimension reconstruction MSE sits at 1 and the pairwise Pearson
// correlations collapse.
struct ConvergeConfig {
    std::size_t input_dim = 8;
    std::size_t embed_dim = 4;
    std::size_t hidden = 32;
    std::size_t bank_hidden = 32;
    game::Formulation formulation = game::Formulation::standardized;
    double lambda = 1.0;
    std::size_t k = 4;
    std::size_t steps = 5000;
    std::size_t batch = 256;
    double encoder_lr = 1e-3;
    double predictor_lr = 1e-2;
    std::size_t dcorr_interval = 1000;
    std::size_t eval_n = 4096;
    std::uint64_t seed = 1;
};

struct ConvergeOutcome {
    game::RunLog log;
    bool aborted = false;
};

ConvergeOutcome run_convergence(const ConvergeConfig& cfg);

} // namespace adlab::apps

#endif
