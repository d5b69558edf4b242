#ifndef ADLAB_NN_OPTIMIZER_HPP
#define ADLAB_NN_OPTIMIZER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nn/mlp.hpp"

namespace adlab::nn {

enum class OptimizerKind { sgd_momentum, adam };

OptimizerKind optimizer_from_string(const std::string& name);
const char* to_string(OptimizerKind k);

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::sgd_momentum;
    double momentum = 0.9;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.0; // decoupled L2
};

// Holds per-parameter slots for one fixed list of ParamRefs. The ref list
// is captured at construction; step() must be called with matching sizes.
class Optimizer {
public:
    Optimizer(OptimizerConfig cfg, const std::vector<ParamRef>& refs);

    // Applies one update from the refs' grad buffers at learning rate lr.
    // Throws NumericError on non-finite gradients.
    void step(double lr);

    std::uint64_t step_count() const { return step_count_; }
    const OptimizerConfig& config() const { return cfg_; }

private:
    OptimizerConfig cfg_;
    std::vector<ParamRef> refs_;
    std::vector<std::vector<double>> slot_a_; // momentum / Adam m
    std::vector<std::vector<double>> slot_b_; // Adam v
    std::uint64_t step_count_ = 0;
};

enum class ScheduleKind { constant, cosine_with_warmup };

ScheduleKind schedule_from_string(const std::string& name);
const char* to_string(ScheduleKind k);

struct LrSchedule {
    ScheduleKind kind = ScheduleKind::constant;
    std::size_t total_steps = 0;
    std::size_t warmup_steps = 0;
    double base = 1.0;

    // Linear ramp 0→base over warmup, then cosine base→0 over the rest.
    // Steps past total clamp to the final value.
    double at(std::size_t step) const;
};

} // namespace adlab::nn

#endif
