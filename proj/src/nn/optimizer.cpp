#include "nn/optimizer.hpp"

#include <cmath>

#include "core/error.hpp"

namespace adlab::nn {

OptimizerKind optimizer_from_string(const std::string& name) {
    if (name == "sgd" || name == "sgd_momentum") return OptimizerKind::sgd_momentum;
    if (name == "adam") return OptimizerKind::adam;
    throw ConfigError("unknown optimizer: " + name);
}

const char* to_string(OptimizerKind k) {
    return k == OptimizerKind::adam ? "adam" : "sgd_momentum";
}

Optimizer::Optimizer(OptimizerConfig cfg, const std::vector<ParamRef>& refs)
    : cfg_(cfg), refs_(refs) {
    slot_a_.reserve(refs_.size());
    for (const auto& r : refs_) slot_a_.emplace_back(r.n, 0.0);
    if (cfg_.kind == OptimizerKind::adam) {
        slot_b_.reserve(refs_.size());
        for (const auto& r : refs_) slot_b_.emplace_back(r.n, 0.0);
    }
}

void Optimizer::step(double lr) {
    ++step_count_;
    for (std::size_t pi = 0; pi < refs_.size(); ++pi) {
        const ParamRef& ref = refs_[pi];
        for (std::size_t i = 0; i < ref.n; ++i)
            if (!std::isfinite(ref.grad[i]))
                throw NumericError("optimizer step " + std::to_string(step_count_) +
                                   ": non-finite gradient");
        if (cfg_.kind == OptimizerKind::sgd_momentum) {
            auto& vel = slot_a_[pi];
            for (std::size_t i = 0; i < ref.n; ++i) {
                vel[i] = cfg_.momentum * vel[i] + ref.grad[i];
                ref.value[i] -= lr * (vel[i] + cfg_.weight_decay * ref.value[i]);
            }
        } else {
            auto& m = slot_a_[pi];
            auto& v = slot_b_[pi];
            const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(step_count_));
            const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(step_count_));
            for (std::size_t i = 0; i < ref.n; ++i) {
                const double g = ref.grad[i];
                m[i] = cfg_.beta1 * m[i] + (1.0 - cfg_.beta1) * g;
                v[i] = cfg_.beta2 * v[i] + (1.0 - cfg_.beta2) * g * g;
                const double mhat = m[i] / bc1;
                const double vhat = v[i] / bc2;
                ref.value[i] -=
                    lr * (mhat / (std::sqrt(vhat) + cfg_.eps) + cfg_.weight_decay * ref.value[i]);
            }
        }
    }
}

ScheduleKind schedule_from_string(const std::string& name) {
    if (name == "constant") return ScheduleKind::constant;
    if (name == "cosine" || name == "cosine_with_warmup") return ScheduleKind::cosine_with_warmup;
    throw ConfigError("unknown schedule: " + name);
}

const char* to_string(ScheduleKind k) {
    return k == ScheduleKind::cosine_with_warmup ? "cosine_with_warmup" : "constant";
}

double LrSchedule::at(std::size_t step) const {
    if (kind == ScheduleKind::constant) return base;
    if (warmup_steps > total_steps)
        throw ConfigError("LrSchedule: warmup exceeds total steps");
    if (step > total_steps) step = total_steps;
    if (warmup_steps > 0 && step < warmup_steps)
        return base * static_cast<double>(step) / static_cast<double>(warmup_steps);
    const std::size_t span = total_steps - warmup_steps;
    if (span == 0) return base;
    const double progress = static_cast<double>(step - warmup_steps) / static_cast<double>(span);
    return base * 0.5 * (1.0 + std::cos(M_PI * progress));
}

} // namespace adlab::nn
