#ifndef ADLAB_NN_GRAD_CHECK_HPP
#define ADLAB_NN_GRAD_CHECK_HPP

#include <functional>
#include <vector>

#include "nn/mlp.hpp"

namespace adlab::nn {

// Central finite differences against an analytic gradient.
//
// `loss` re-evaluates the scalar objective from the current contents of
// the parameter blocks; `analytic` is the gradient at the unperturbed
// point, flattened in ref order. Returns the max over coordinates of
// |analytic - fd| / max(1, |fd|). Parameters are restored on exit.
double grad_check(const std::function<double()>& loss, const std::vector<ParamRef>& refs,
                  const std::vector<double>& analytic, double h = 1e-4);

// Convenience: runs `backward` once to produce the analytic gradient from
// the refs' grad buffers, then compares against finite differences of
// `loss`.
double grad_check_refs(const std::function<double()>& loss,
                       const std::function<void()>& backward, std::vector<ParamRef> refs,
                       double h = 1e-4);

std::vector<double> flatten_grads(const std::vector<ParamRef>& refs);

} // namespace adlab::nn

#endif
