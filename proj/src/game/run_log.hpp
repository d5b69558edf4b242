#ifndef ADLAB_GAME_RUN_LOG_HPP
#define ADLAB_GAME_RUN_LOG_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "metrics/dependence.hpp"

namespace adlab::game {

inline constexpr int kRunLogSchemaVersion = 1;

struct StepRecord {
    std::size_t step = 0;
    double predictor_loss = 0.0;
    double adversarial_loss = 0.0;
    double task_loss = 0.0;
    double mean_abs_pearson = 0.0;
    double mean_z_norm = 0.0;
    std::optional<double> mean_sq_dcorr; // only at the periodic interval
};

// Per-step time series of the adversarial game plus a terminal summary.
struct RunLog {
    std::vector<StepRecord> steps;
    metrics::CorrSummary terminal;
    double final_predictor_mse = 0.0;  // on a fresh evaluation batch
    double final_mean_norm = 0.0;
    double initial_mean_sq_dcorr = 0.0;
    bool aborted = false;
    std::string abort_reason;

    void append(StepRecord rec); // enforces strictly increasing steps

    // One row per step; `mean_sq_dcorr` cell is empty except at the
    // periodic evaluation steps. Header documented in the README.
    void write_csv(std::ostream& os) const;

    nlohmann::json summary_json() const;
};

} // namespace adlab::game

#endif
