#include "apps/converge.hpp"

#include "synth/generators.hpp"

namespace adlab::apps {

ConvergeOutcome run_convergence(const ConvergeConfig& cfg) {
    game::AdminConfig game_cfg;
    game_cfg.formulation = cfg.formulation;
    game_cfg.distance = game::Distance::l2_squared;
    game_cfg.alpha = 0.4;
    game_cfg.lambda = cfg.lambda;
    game_cfg.k = cfg.k;
    game_cfg.steps = cfg.steps;
    game_cfg.batch = cfg.batch;
    game_cfg.dim = cfg.embed_dim;
    game_cfg.seed = cfg.seed;
    game_cfg.encoder_opt.kind = nn::OptimizerKind::adam;
    game_cfg.predictor_opt.kind = nn::OptimizerKind::adam;
    game_cfg.encoder_lr = cfg.encoder_lr;
    game_cfg.predictor_lr = cfg.predictor_lr;
    game_cfg.schedule = nn::ScheduleKind::constant;
    game_cfg.dcorr_interval = cfg.dcorr_interval;
    game_cfg.eval_batch = cfg.eval_n;

    const game::BatchFn data = [seed = cfg.seed, dim = cfg.input_dim](Rng& rng, std::size_t n) {
        game::Batch b;
        b.x = synth::sample_correlated_gaussian(n, dim, seed, rng);
        return b;
    };

    Rng enc_rng(cfg.seed, streams::kEncoderInit);
    game::MlpEncoder encoder(nn::Mlp::make({cfg.input_dim, cfg.hidden, cfg.embed_dim},
                                           nn::Activation::gelu, enc_rng));
    Rng bank_rng(cfg.seed, streams::kBankInit);
    game::PredictorBank bank(cfg.embed_dim, {cfg.bank_hidden, 2, nn::Activation::gelu}, bank_rng);

    ConvergeOutcome out;
    out.log = game::admin_train(encoder, bank, data, nullptr, game_cfg);
    out.aborted = out.log.aborted;
    return out;
}

} // namespace adlab::apps
