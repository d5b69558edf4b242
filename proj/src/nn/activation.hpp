#ifndef ADLAB_NN_ACTIVATION_HPP
#define ADLAB_NN_ACTIVATION_HPP

#include <string>

namespace adlab::nn {

enum class Activation { identity, relu, gelu };

// GELU is the exact erf form x·Φ(x), not the tanh approximation.
double activate(Activation act, double x);
double activate_derivative(Activation act, double x);

Activation activation_from_string(const std::string& name);
const char* to_string(Activation act);

} // namespace adlab::nn

#endif
