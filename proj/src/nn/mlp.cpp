#include "nn/mlp.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "core/error.hpp"

namespace adlab::nn {

DenseLayer::DenseLayer(std::size_t in, std::size_t out, Activation a)
    : weight(out, in), bias(out, 0.0), act(a), weight_grad(out, in), bias_grad(out, 0.0) {}

void DenseLayer::init(Rng& rng) {
    const double limit = std::sqrt(6.0 / static_cast<double>(in_dim() + out_dim()));
    for (double& w : weight.data()) w = rng.uniform(-limit, limit);
    for (double& b : bias) b = 0.0;
}

Mlp Mlp::make(const std::vector<std::size_t>& dims, Activation hidden_act, Rng& rng) {
    if (dims.size() < 2) throw ConfigError("Mlp::make: need at least input and output dims");
    Mlp net;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
        const bool last = (i + 2 == dims.size());
        DenseLayer layer(dims[i], dims[i + 1], last ? Activation::identity : hidden_act);
        layer.init(rng);
        net.add_layer(std::move(layer));
    }
    return net;
}

void Mlp::add_layer(DenseLayer layer) {
    if (!layers_.empty() && layers_.back().out_dim() != layer.in_dim())
        throw ConfigError("Mlp::add_layer: dimension chain broken (" +
                          std::to_string(layers_.back().out_dim()) + " -> " +
                          std::to_string(layer.in_dim()) + ")");
    layers_.push_back(std::move(layer));
}

std::size_t Mlp::param_count() const {
    std::size_t n = 0;
    for (const auto& l : layers_) n += l.weight.size() + l.bias.size();
    return n;
}

namespace {

Matrix dense_forward(const DenseLayer& layer, const Matrix& x, Matrix* pre_out) {
    if (x.cols() != layer.in_dim())
        throw ConfigError("dense forward: input width " + std::to_string(x.cols()) +
                          " != layer in_dim " + std::to_string(layer.in_dim()));
    Matrix pre = matmul_bt(x, layer.weight);
    for (std::size_t r = 0; r < pre.rows(); ++r) {
        auto row = pre.row(r);
        for (std::size_t c = 0; c < pre.cols(); ++c) row[c] += layer.bias[c];
    }
    Matrix post = pre;
    if (layer.act != Activation::identity)
        for (double& v : post.data()) v = activate(layer.act, v);
    if (pre_out) *pre_out = std::move(pre);
    return post;
}

} // namespace

Matrix Mlp::forward(const Matrix& x) const {
    Matrix cur = x;
    for (const auto& layer : layers_) cur = dense_forward(layer, cur, nullptr);
    return cur;
}

Matrix Mlp::forward_cached(const Matrix& x, MlpCache& cache) const {
    cache.input = x;
    cache.pre.assign(layers_.size(), Matrix());
    cache.post.assign(layers_.size(), Matrix());
    Matrix cur = x;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        cur = dense_forward(layers_[i], cur, &cache.pre[i]);
        cache.post[i] = cur;
    }
    return cur;
}

Matrix Mlp::backward(const MlpCache& cache, const Matrix& upstream) {
    if (layers_.empty()) throw ConfigError("Mlp::backward: empty net");
    if (upstream.rows() != cache.input.rows() || upstream.cols() != out_dim())
        throw ConfigError("Mlp::backward: upstream shape mismatch");

    Matrix delta = upstream;
    for (std::size_t li = layers_.size(); li-- > 0;) {
        DenseLayer& layer = layers_[li];
        // Through the activation.
        if (layer.act != Activation::identity) {
            const Matrix& pre = cache.pre[li];
            for (std::size_t i = 0; i < delta.size(); ++i)
                delta.data()[i] *= activate_derivative(layer.act, pre.data()[i]);
        }
        const Matrix& layer_in = (li == 0) ? cache.input : cache.post[li - 1];
        layer.weight_grad += matmul_at(delta, layer_in);
        for (std::size_t r = 0; r < delta.rows(); ++r) {
            auto row = delta.row(r);
            for (std::size_t c = 0; c < delta.cols(); ++c) layer.bias_grad[c] += row[c];
        }
        delta = matmul(delta, layer.weight);
    }
    return delta;
}

void Mlp::zero_grad() {
    for (auto& l : layers_) {
        l.weight_grad.fill(0.0);
        std::fill(l.bias_grad.begin(), l.bias_grad.end(), 0.0);
    }
}

std::vector<ParamRef> Mlp::param_refs() {
    std::vector<ParamRef> refs;
    refs.reserve(2 * layers_.size());
    for (auto& l : layers_) {
        refs.push_back({l.weight.data().data(), l.weight_grad.data().data(), l.weight.size()});
        refs.push_back({l.bias.data(), l.bias_grad.data(), l.bias.size()});
    }
    return refs;
}

std::uint64_t param_hash(const std::vector<ParamRef>& refs) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& ref : refs) {
        for (std::size_t i = 0; i < ref.n; ++i) {
            std::uint64_t bits;
            std::memcpy(&bits, &ref.value[i], sizeof(bits));
            h ^= bits;
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

} // namespace adlab::nn
