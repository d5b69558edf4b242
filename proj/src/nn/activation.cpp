#include "nn/activation.hpp"

#include <cmath>

#include "core/error.hpp"

namespace adlab::nn {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

inline double norm_cdf(double x) { return 0.5 * (1.0 + std::erf(x * kInvSqrt2)); }
inline double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }
} // namespace

double activate(Activation act, double x) {
    switch (act) {
    case Activation::identity: return x;
    case Activation::relu: return x > 0.0 ? x : 0.0;
    case Activation::gelu: return x * norm_cdf(x);
    }
    return x;
}

double activate_derivative(Activation act, double x) {
    switch (act) {
    case Activation::identity: return 1.0;
    case Activation::relu: return x > 0.0 ? 1.0 : 0.0;
    case Activation::gelu: return norm_cdf(x) + x * norm_pdf(x);
    }
    return 1.0;
}

Activation activation_from_string(const std::string& name) {
    if (name == "identity") return Activation::identity;
    if (name == "relu") return Activation::relu;
    if (name == "gelu") return Activation::gelu;
    throw ConfigError("unknown activation: " + name);
}

const char* to_string(Activation act) {
    switch (act) {
    case Activation::identity: return "identity";
    case Activation::relu: return "relu";
    case Activation::gelu: return "gelu";
    }
    return "identity";
}

} // namespace adlab::nn
