#include "game/train.hpp"

#include <cmath>
#include <unordered_set>

#include "game/losses.hpp"
#include "game/standardizer.hpp"
#include "nn/optimizer.hpp"

namespace adlab::game {

namespace {

double mean_row_norm(const Matrix& z) {
    double acc = 0.0;
    for (std::size_t r = 0; r < z.rows(); ++r) {
        double s = 0.0;
        for (double v : z.row(r)) s += v * v;
        acc += std::sqrt(s);
    }
    return acc / static_cast<double>(z.rows());
}

// Evaluation-time view of the game state: standardize if the formulation
// calls for it, reconstruct with the frozen bank, report the training
// distance.
double eval_predictor_loss(const Matrix& z, const PredictorBank& bank, const AdminConfig& cfg) {
    if (cfg.formulation == Formulation::standardized) {
        Standardizer std_op(cfg.standardize_eps);
        const Matrix zs = std_op.forward(z);
        return predictor_loss(zs, bank.forward_const(zs), Distance::l2_squared);
    }
    return predictor_loss(z, bank.forward_const(z), cfg.distance);
}

} // namespace

std::vector<nn::ParamRef> dedup_param_refs(std::vector<nn::ParamRef> refs) {
    std::unordered_set<const double*> seen;
    std::vector<nn::ParamRef> out;
    out.reserve(refs.size());
    for (const auto& r : refs)
        if (seen.insert(r.value).second) out.push_back(r);
    return out;
}

RunLog admin_train(EncoderModel& encoder, PredictorBank& bank, const BatchFn& data,
                   TaskModel* task, const AdminConfig& cfg) {
    cfg.validate();
    if (bank.dim() != cfg.dim)
        throw ConfigError("admin_train: bank dim " + std::to_string(bank.dim()) +
                          " != config dim " + std::to_string(cfg.dim));

    Rng train_rng(cfg.seed, streams::kTraining);
    Rng eval_rng(cfg.seed, streams::kEval);

    const Batch eval_batch = data(eval_rng, cfg.eval_batch);

    auto enc_refs = encoder.param_refs();
    if (task) {
        auto task_refs = task->param_refs();
        enc_refs.insert(enc_refs.end(), task_refs.begin(), task_refs.end());
    }
    enc_refs = dedup_param_refs(enc_refs);
    nn::Optimizer enc_opt(cfg.encoder_opt, enc_refs);
    nn::Optimizer pred_opt(cfg.predictor_opt, bank.param_refs());

    const nn::LrSchedule schedule{cfg.schedule, cfg.steps, cfg.warmup_steps, 1.0};

    const bool standardized = cfg.formulation == Formulation::standardized;
    const Distance pred_distance = standardized ? Distance::l2_squared : cfg.distance;
    // In two-view mode the bank trains on both views' representations.

    RunLog log;
    {
        const Matrix z0 = encoder.forward(eval_batch.x);
        log.initial_mean_sq_dcorr = metrics::corr_summary(z0).mean_sq_dcorr;
    }

    try {
        for (std::size_t step = 0; step < cfg.steps; ++step) {
            const double lr_mult = schedule.at(step);
            double last_pred_loss = 0.0;

            for (std::size_t inner = 0; inner < cfg.k; ++inner) {
                const Batch b = data(train_rng, cfg.batch);
                Matrix z = encoder.forward(b.x);
                if (cfg.two_view) z = vstack(z, encoder.forward(b.x2, 1));
                Matrix z_eff;
                if (standardized) {
                    Standardizer std_op(cfg.standardize_eps);
                    z_eff = std_op.forward(z);
                } else {
                    z_eff = std::move(z);
                }
                const Matrix zhat = bank.forward(z_eff);
                last_pred_loss = predictor_loss(z_eff, zhat, pred_distance);
                if (!std::isfinite(last_pred_loss))
                    throw NumericError("predictor loss diverged at step " + std::to_string(step));
                bank.zero_grad();
                bank.backward_params(predictor_loss_grad(z_eff, zhat, pred_distance));
                pred_opt.step(cfg.predictor_lr * lr_mult);
            }

            const Batch b = data(train_rng, cfg.batch);
            const Matrix z = encoder.forward(b.x, 0);
            if (!z.all_finite())
                throw NumericError("encoder output diverged at step " + std::to_string(step));

            encoder.zero_grad();
            if (task) task->zero_grad();

            double adv_value = 0.0;
            double task_value = 0.0;
            Matrix dz_total(z.rows(), z.cols());

            if (cfg.two_view) {
                const Matrix z2 = encoder.forward(b.x2, 1);
                Standardizer std1(cfg.standardize_eps), std2(cfg.standardize_eps);
                const Matrix z1s = standardized ? std1.forward(z) : z;
                const Matrix z2s = standardized ? std2.forward(z2) : z2;

                // Adversarial term on each view, λ/2 apiece.
                Matrix up1, up2;
                {
                    const Matrix zhat1 = bank.forward(z1s);
                    AdversarialGrad g1 = encoder_adversarial_loss_grad(
                        z1s, zhat1, cfg.formulation, cfg.distance, cfg.alpha);
                    up1 = bank.backward_inputs(g1.dzhat);
                    up1 += g1.dz;
                    up1 *= 0.5 * cfg.lambda;
                    adv_value += 0.5 * g1.value;
                }
                {
                    const Matrix zhat2 = bank.forward(z2s);
                    AdversarialGrad g2 = encoder_adversarial_loss_grad(
                        z2s, zhat2, cfg.formulation, cfg.distance, cfg.alpha);
                    up2 = bank.backward_inputs(g2.dzhat);
                    up2 += g2.dz;
                    up2 *= 0.5 * cfg.lambda;
                    adv_value += 0.5 * g2.value;
                }

                // Invariance between the standardized views is the task.
                Matrix di1, di2;
                task_value = invariance_mse_grad(z1s, z2s, di1, di2);
                up1 += di1;
                up2 += di2;

                dz_total = standardized ? std1.backward(up1) : up1;
                const Matrix dz2 = standardized ? std2.backward(up2) : up2;
                encoder.backward(dz2, 1);
            } else {
                Standardizer std_op(cfg.standardize_eps);
                const Matrix z_eff = standardized ? std_op.forward(z) : z;
                const Matrix zhat = bank.forward(z_eff);
                AdversarialGrad g = encoder_adversarial_loss_grad(z_eff, zhat, cfg.formulation,
                                                                  cfg.distance, cfg.alpha);
                adv_value = g.value;
                Matrix up = bank.backward_inputs(g.dzhat);
                up += g.dz;
                up *= cfg.lambda;
                dz_total = standardized ? std_op.backward(up) : std::move(up);

                if (task) {
                    Matrix dz_task;
                    task_value = task->loss_and_grad(b, z, dz_task);
                    dz_total += dz_task;
                }
            }
            if (!std::isfinite(adv_value) || !std::isfinite(task_value))
                throw NumericError("encoder loss diverged at step " + std::to_string(step));

            encoder.backward(dz_total, 0);
            enc_opt.step(cfg.encoder_lr * lr_mult);

            StepRecord rec;
            rec.step = step + 1;
            rec.predictor_loss = last_pred_loss;
            rec.adversarial_loss = adv_value;
            rec.task_loss = task_value;
            rec.mean_abs_pearson = metrics::mean_abs_offdiag_pearson(z);
            rec.mean_z_norm = mean_row_norm(z);
            const bool last_step = (step + 1 == cfg.steps);
            if ((cfg.dcorr_interval > 0 && (step + 1) % cfg.dcorr_interval == 0) || last_step) {
                const Matrix z_eval = encoder.forward(eval_batch.x);
                rec.mean_sq_dcorr = metrics::corr_summary(z_eval).mean_sq_dcorr;
            }
            log.append(std::move(rec));
        }

        const Matrix z_eval = encoder.forward(eval_batch.x);
        if (!z_eval.all_finite()) throw NumericError("final evaluation diverged");
        log.terminal = metrics::corr_summary(z_eval);
        log.final_predictor_mse = eval_predictor_loss(z_eval, bank, cfg);
        log.final_mean_norm = mean_row_norm(z_eval);
    } catch (const NumericError& e) {
        log.aborted = true;
        log.abort_reason = e.what();
    }
    return log;
}

} // namespace adlab::game
