#ifndef ADLAB_NN_MLP_HPP
#define ADLAB_NN_MLP_HPP

#include <cstdint>
#include <vector>

#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "nn/activation.hpp"

namespace adlab::nn {

// A trainable parameter block: contiguous values with a same-shaped
// gradient buffer. Optimizers work on flat lists of these.
struct ParamRef {
    double* value = nullptr;
    double* grad = nullptr;
    std::size_t n = 0;
};

// Fully connected layer y = x·Wᵀ + b followed by the activation.
// W is out×in. Gradient buffers live with the layer.
struct DenseLayer {
    Matrix weight;      // out×in
    std::vector<double> bias;
    Activation act = Activation::identity;

    Matrix weight_grad;
    std::vector<double> bias_grad;

    DenseLayer() = default;
    DenseLayer(std::size_t in, std::size_t out, Activation a);

    std::size_t in_dim() const { return weight.cols(); }
    std::size_t out_dim() const { return weight.rows(); }

    // Uniform in ±sqrt(6/(fan_in+fan_out)); biases stay zero.
    void init(Rng& rng);
};

struct MlpCache {
    Matrix input;                 // batch fed to the first layer
    std::vector<Matrix> pre;      // pre-activation per layer
    std::vector<Matrix> post;     // post-activation per layer
};

class Mlp {
public:
    Mlp() = default;
    // dims = {in, h1, ..., out}; `hidden_act` on all but the last layer,
    // identity output.
    static Mlp make(const std::vector<std::size_t>& dims, Activation hidden_act, Rng& rng);

    std::vector<DenseLayer>& layers() { return layers_; }
    const std::vector<DenseLayer>& layers() const { return layers_; }
    void add_layer(DenseLayer layer);

    std::size_t in_dim() const { return layers_.front().in_dim(); }
    std::size_t out_dim() const { return layers_.back().out_dim(); }
    std::size_t param_count() const;

    Matrix forward(const Matrix& x) const;
    Matrix forward_cached(const Matrix& x, MlpCache& cache) const;

    // Reverse-mode gradients of <upstream, output>. Accumulates into the
    // layers' grad buffers; returns the gradient w.r.t. the input batch.
    Matrix backward(const MlpCache& cache, const Matrix& upstream);

    void zero_grad();
    std::vector<ParamRef> param_refs();

private:
    std::vector<DenseLayer> layers_;
};

std::uint64_t param_hash(const std::vector<ParamRef>& refs);

} // namespace adlab::nn

#endif
