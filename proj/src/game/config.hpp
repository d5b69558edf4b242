#ifndef ADLAB_GAME_CONFIG_HPP
#define ADLAB_GAME_CONFIG_HPP

#include <cstdint>
#include <string>

#include "core/error.hpp"
#include "nn/optimizer.hpp"

namespace adlab::game {

// Encoder-side adversarial objective.
//   standardized: 1 − MSE on batch-standardized representations.
//   margin:       hinge max(0, α − dist) on raw representations.
//   raw:          unbounded error maximization (−MSE, no standardization,
//                 no margin); ablation mode only.
enum class Formulation { standardized, margin, raw };

enum class Distance { l2_squared, l1 };

inline Formulation formulation_from_string(const std::string& s) {
    if (s == "standardized") return Formulation::standardized;
    if (s == "margin") return Formulation::margin;
    if (s == "raw") return Formulation::raw;
    throw ConfigError("unknown formulation: " + s);
}

inline const char* to_string(Formulation f) {
    switch (f) {
    case Formulation::standardized: return "standardized";
    case Formulation::margin: return "margin";
    case Formulation::raw: return "raw";
    }
    return "standardized";
}

inline Distance distance_from_string(const std::string& s) {
    if (s == "l2_squared" || s == "l2") return Distance::l2_squared;
    if (s == "l1") return Distance::l1;
    throw ConfigError("unknown distance: " + s);
}

inline const char* to_string(Distance d) {
    return d == Distance::l1 ? "l1" : "l2_squared";
}

struct AdminConfig {
    Formulation formulation = Formulation::standardized;
    Distance distance = Distance::l2_squared;
    double alpha = 0.0;      // margin; required > 0 for the margin formulation
    double lambda = 1.0;     // adversarial weight in the encoder objective
    std::size_t k = 1;       // predictor updates per encoder update
    std::size_t steps = 1000;
    std::size_t batch = 256;
    std::size_t dim = 4;     // embedding width d
    std::uint64_t seed = 0;

    nn::OptimizerConfig encoder_opt{};
    nn::OptimizerConfig predictor_opt{};
    double encoder_lr = 1e-3;
    double predictor_lr = 1e-2;
    nn::ScheduleKind schedule = nn::ScheduleKind::constant;
    std::size_t warmup_steps = 0;

    double standardize_eps = 1e-5;
    bool two_view = false;   // SSL mode: batches carry a second view

    // Logging/evaluation knobs.
    std::size_t dcorr_interval = 500; // 0 disables periodic summaries
    std::size_t eval_batch = 1024;    // terminal + periodic evaluation size

    void validate() const {
        if (dim < 2) throw ConfigError("AdminConfig: embedding dim must be >= 2");
        if (k < 1) throw ConfigError("AdminConfig: predictor step ratio k must be >= 1");
        if (formulation == Formulation::margin && alpha <= 0.0)
            throw ConfigError("AdminConfig: margin formulation requires alpha > 0");
        if (lambda < 0.0) throw ConfigError("AdminConfig: lambda must be >= 0");
        if (batch < 2) throw ConfigError("AdminConfig: batch must be >= 2");
    }
};

} // namespace adlab::game

#endif
