#include "game/run_log.hpp"

#include <cmath>

#include "core/error.hpp"
#include "io/csv.hpp"

namespace adlab::game {

void RunLog::append(StepRecord rec) {
    if (!steps.empty() && rec.step <= steps.back().step)
        throw ConfigError("RunLog: steps must be strictly increasing");
    for (double v : {rec.predictor_loss, rec.adversarial_loss, rec.task_loss,
                     rec.mean_abs_pearson, rec.mean_z_norm})
        if (!std::isfinite(v)) throw NumericError("RunLog: non-finite value at step " +
                                                  std::to_string(rec.step));
    steps.push_back(std::move(rec));
}

void RunLog::write_csv(std::ostream& os) const {
    os << "step,predictor_loss,adversarial_loss,task_loss,mean_abs_pearson,mean_z_norm,"
          "mean_sq_dcorr\n";
    for (const auto& r : steps) {
        os << r.step << ',' << io::format_double(r.predictor_loss) << ','
           << io::format_double(r.adversarial_loss) << ',' << io::format_double(r.task_loss)
           << ',' << io::format_double(r.mean_abs_pearson) << ','
           << io::format_double(r.mean_z_norm) << ',';
        if (r.mean_sq_dcorr) os << io::format_double(*r.mean_sq_dcorr);
        os << '\n';
    }
}

nlohmann::json RunLog::summary_json() const {
    nlohmann::json j;
    j["schema_version"] = kRunLogSchemaVersion;
    j["steps_logged"] = steps.size();
    j["aborted"] = aborted;
    if (aborted) j["abort_reason"] = abort_reason;
    j["final_predictor_mse"] = final_predictor_mse;
    j["final_mean_norm"] = final_mean_norm;
    j["initial_mean_sq_dcorr"] = initial_mean_sq_dcorr;
    j["terminal"] = {
        {"mean_abs_offdiag_pearson", terminal.mean_abs_offdiag_pearson},
        {"mean_sq_dcorr", terminal.mean_sq_dcorr},
        {"per_dim_dcorr", terminal.per_dim_dcorr},
        {"degenerate_columns", terminal.degenerate_columns},
    };
    if (!steps.empty()) {
        const auto& last = steps.back();
        j["final_step"] = {
            {"step", last.step},
            {"predictor_loss", last.predictor_loss},
            {"adversarial_loss", last.adversarial_loss},
            {"task_loss", last.task_loss},
            {"mean_abs_pearson", last.mean_abs_pearson},
            {"mean_z_norm", last.mean_z_norm},
        };
    }
    return j;
}

} // namespace adlab::game
