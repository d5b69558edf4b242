#include "game/predictor_bank.hpp"

#include <string>

#include "core/error.hpp"

namespace adlab::game {

PredictorBank::PredictorBank(std::size_t dim, Arch arch, Rng& rng) {
    if (dim < 2) throw ConfigError("PredictorBank: need dim >= 2");
    predictors_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<std::size_t> dims;
        dims.push_back(dim - 1);
        if (arch.hidden > 0 && arch.depth >= 2)
            dims.insert(dims.end(), arch.depth - 1, arch.hidden);
        dims.push_back(1);
        predictors_.push_back(nn::Mlp::make(dims, arch.act, rng));
    }
    caches_.resize(dim);
}

std::vector<std::size_t> PredictorBank::rest_indices(std::size_t skip) const {
    std::vector<std::size_t> rest;
    rest.reserve(dim() - 1);
    for (std::size_t j = 0; j < dim(); ++j)
        if (j != skip) rest.push_back(j);
    return rest;
}

Matrix PredictorBank::forward(const Matrix& z) {
    if (z.cols() != dim())
        throw ConfigError("PredictorBank::forward: got " + std::to_string(z.cols()) +
                          " columns, bank has " + std::to_string(dim()));
    Matrix zhat(z.rows(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        const Matrix masked = z.select_columns(rest_indices(i));
        const Matrix out = predictors_[i].forward_cached(masked, caches_[i]);
        zhat.set_column(i, out.column(0));
    }
    return zhat;
}

Matrix PredictorBank::forward_const(const Matrix& z) const {
    if (z.cols() != dim()) throw ConfigError("PredictorBank::forward_const: column mismatch");
    Matrix zhat(z.rows(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        const Matrix out = predictors_[i].forward(z.select_columns(rest_indices(i)));
        zhat.set_column(i, out.column(0));
    }
    return zhat;
}

void PredictorBank::backward_params(const Matrix& upstream) {
    for (std::size_t i = 0; i < dim(); ++i) {
        Matrix up_i(upstream.rows(), 1);
        up_i.set_column(0, upstream.column(i));
        predictors_[i].backward(caches_[i], up_i);
    }
}

Matrix PredictorBank::backward_inputs(const Matrix& upstream) {
    Matrix dz(upstream.rows(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        Matrix up_i(upstream.rows(), 1);
        up_i.set_column(0, upstream.column(i));
        // Parameter grads accumulate here too; callers that only want the
        // input path (the encoder step) zero the bank afterwards or simply
        // never step the bank optimizer from this state.
        const Matrix din = predictors_[i].backward(caches_[i], up_i);
        const auto rest = rest_indices(i);
        for (std::size_t r = 0; r < dz.rows(); ++r) {
            const auto src = din.row(r);
            auto dst = dz.row(r);
            for (std::size_t j = 0; j < rest.size(); ++j) dst[rest[j]] += src[j];
        }
    }
    return dz;
}

void PredictorBank::zero_grad() {
    for (auto& p : predictors_) p.zero_grad();
}

std::vector<nn::ParamRef> PredictorBank::param_refs() {
    std::vector<nn::ParamRef> refs;
    for (auto& p : predictors_) {
        auto r = p.param_refs();
        refs.insert(refs.end(), r.begin(), r.end());
    }
    return refs;
}

std::uint64_t PredictorBank::params_hash() { return nn::param_hash(param_refs()); }

} // namespace adlab::game
