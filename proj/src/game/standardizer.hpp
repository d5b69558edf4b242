#ifndef ADLAB_GAME_STANDARDIZER_HPP
#define ADLAB_GAME_STANDARDIZER_HPP

#include <vector>

#include "core/matrix.hpp"

namespace adlab::game {

// Dimension-wise batch standardization (z − μ)/sqrt(v + ε) with the biased
// batch variance, differentiable through the batch statistics like a
// batch-norm layer. forward() caches what backward() needs.
class Standardizer {
public:
    explicit Standardizer(double eps = 1e-5) : eps_(eps) {}

    Matrix forward(const Matrix& z);
    // Gradient w.r.t. the forward input, including the paths through μ and v.
    Matrix backward(const Matrix& upstream) const;

    const std::vector<double>& mean() const { return mu_; }
    const std::vector<double>& scale() const { return s_; } // sqrt(v + eps)
    double eps() const { return eps_; }

private:
    double eps_;
    std::vector<double> mu_;
    std::vector<double> s_;
    Matrix xhat_;
};

} // namespace adlab::game

#endif
