#ifndef ADLAB_GAME_PREDICTOR_BANK_HPP
#define ADLAB_GAME_PREDICTOR_BANK_HPP

#include <cstdint>
#include <vector>

#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "nn/mlp.hpp"

namespace adlab::game {

// One small network per embedding dimension, predictor i mapping the d−1
// remaining coordinates to coordinate i. The mask is structural: column i
// is removed from predictor i's input, so ∂ẑ_i/∂z_i = 0 identically.
// Running d small nets in one batched pass is mathematically identical to
// the grouped-convolution formulation.
class PredictorBank {
public:
    struct Arch {
        std::size_t hidden = 32;      // 0 => linear predictors
        std::size_t depth = 2;        // number of dense layers
        nn::Activation act = nn::Activation::gelu;
    };

    PredictorBank() = default;
    PredictorBank(std::size_t dim, Arch arch, Rng& rng);

    std::size_t dim() const { return predictors_.size(); }

    // ẑ (n×d) from z (n×d). Caches activations for the backward passes.
    Matrix forward(const Matrix& z);
    // Same without touching the caches (evaluation).
    Matrix forward_const(const Matrix& z) const;

    // Accumulates ∂<upstream, ẑ>/∂φ into the predictors' grad buffers.
    void backward_params(const Matrix& upstream);
    // Gradient w.r.t. the bank input z (predictors treated as constants).
    // Column i receives no contribution from predictor i.
    Matrix backward_inputs(const Matrix& upstream);

    void zero_grad();
    std::vector<nn::ParamRef> param_refs();
    std::uint64_t params_hash();

    std::vector<nn::Mlp>& predictors() { return predictors_; }

private:
    std::vector<std::size_t> rest_indices(std::size_t skip) const;

    std::vector<nn::Mlp> predictors_;
    std::vector<nn::MlpCache> caches_;
};

} // namespace adlab::game

#endif
