#ifndef ADLAB_GAME_TRAIN_HPP
#define ADLAB_GAME_TRAIN_HPP

#include <functional>
#include <vector>

#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "game/config.hpp"
#include "game/predictor_bank.hpp"
#include "game/run_log.hpp"
#include "nn/mlp.hpp"

namespace adlab::game {

struct Batch {
    Matrix x;
    Matrix x2;               // second view; only populated for two-view mode
    std::vector<int> labels; // task labels when the task needs them
};

// Minibatch supplier; draws only from the Rng it is handed, so training,
// evaluation, and dataset construction stay on independent streams.
using BatchFn = std::function<Batch(Rng&, std::size_t)>;

// Anything the encoder step trains through: plain MLP encoders, tied
// linear autoencoders, ... Two forward slots exist so both views of an
// SSL batch can be backpropagated in one step.
class EncoderModel {
public:
    virtual ~EncoderModel() = default;
    virtual Matrix forward(const Matrix& x, int slot = 0) = 0;
    virtual void backward(const Matrix& dz, int slot = 0) = 0;
    virtual std::vector<nn::ParamRef> param_refs() = 0;
    virtual void zero_grad() = 0;
};

class MlpEncoder : public EncoderModel {
public:
    explicit MlpEncoder(nn::Mlp net) : net_(std::move(net)) {}

    Matrix forward(const Matrix& x, int slot = 0) override {
        return net_.forward_cached(x, caches_[slot]);
    }
    void backward(const Matrix& dz, int slot = 0) override { net_.backward(caches_[slot], dz); }
    std::vector<nn::ParamRef> param_refs() override { return net_.param_refs(); }
    void zero_grad() override { net_.zero_grad(); }

    nn::Mlp& net() { return net_; }
    const nn::Mlp& net() const { return net_; }

private:
    nn::Mlp net_;
    nn::MlpCache caches_[2];
};

// Task-side objective evaluated on the raw (unstandardized) encoder
// output. Writes dL_task/dz and accumulates gradients of any parameters
// it owns (classifier head, decoder, ...), which train together with the
// encoder.
class TaskModel {
public:
    virtual ~TaskModel() = default;
    virtual double loss_and_grad(const Batch& batch, const Matrix& z, Matrix& dz) = 0;
    virtual std::vector<nn::ParamRef> param_refs() { return {}; }
    virtual void zero_grad() {}
};

// Alternating minimax: k predictor updates on fresh minibatches with the
// encoder frozen, then one encoder update on a fresh minibatch with the
// predictors frozen, gradients flowing through the bank inputs and the
// batch statistics of the standardizer. Returns the log; on numeric
// failure the log comes back with `aborted` set and the reason recorded
// instead of throwing, so partial results can still be persisted.
RunLog admin_train(EncoderModel& encoder, PredictorBank& bank, const BatchFn& data,
                   TaskModel* task, const AdminConfig& cfg);

std::vector<nn::ParamRef> dedup_param_refs(std::vector<nn::ParamRef> refs);

} // namespace adlab::game

#endif
