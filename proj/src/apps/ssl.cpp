#include "apps/ssl.hpp"

#include "apps/knn.hpp"

namespace adlab::apps {

SslOutcome train_ssl_toy(const SslConfig& cfg) {
    synth::ShapesConfig world_cfg;
    world_cfg.n_per_class = cfg.n_per_class;
    world_cfg.noise_sigma = cfg.noise_sigma;
    world_cfg.intensity = cfg.intensity;
    world_cfg.embed_dim = cfg.feature_dim;
    world_cfg.seed = cfg.seed;
    const synth::ShapesWorld world(world_cfg);

    game::AdminConfig game_cfg;
    game_cfg.formulation = cfg.formulation;
    game_cfg.distance = cfg.distance;
    game_cfg.alpha = cfg.alpha;
    game_cfg.lambda = cfg.lambda;
    game_cfg.k = cfg.k;
    game_cfg.steps = cfg.steps;
    game_cfg.batch = cfg.batch;
    game_cfg.dim = cfg.embed_dim;
    game_cfg.seed = cfg.seed;
    game_cfg.two_view = true;
    game_cfg.encoder_opt.kind = nn::OptimizerKind::sgd_momentum;
    game_cfg.encoder_opt.momentum = cfg.momentum;
    game_cfg.encoder_opt.weight_decay = cfg.weight_decay;
    game_cfg.predictor_opt.kind = nn::OptimizerKind::sgd_momentum;
    game_cfg.predictor_opt.momentum = cfg.momentum;
    game_cfg.encoder_lr = cfg.encoder_lr;
    game_cfg.predictor_lr = cfg.predictor_lr;
    game_cfg.schedule = nn::ScheduleKind::cosine_with_warmup;
    game_cfg.warmup_steps = cfg.warmup;
    game_cfg.dcorr_interval = 0;
    game_cfg.eval_batch = 1024;

    const game::BatchFn data = [&world](Rng& rng, std::size_t n) {
        game::Batch b;
        auto views = world.sample_train_views(n, rng);
        b.x = std::move(views.first);
        b.x2 = std::move(views.second);
        return b;
    };

    Rng enc_rng(cfg.seed, streams::kEncoderInit);
    game::MlpEncoder encoder(nn::Mlp::make({cfg.feature_dim, cfg.hidden, cfg.embed_dim},
                                           nn::Activation::gelu, enc_rng));
    Rng bank_rng(cfg.seed, streams::kBankInit);
    game::PredictorBank bank(cfg.embed_dim, {cfg.bank_hidden, 2, nn::Activation::gelu}, bank_rng);

    SslOutcome out;
    out.log = game::admin_train(encoder, bank, data, nullptr, game_cfg);
    out.aborted = out.log.aborted;
    if (out.aborted) return out;
    out.mean_sq_dcorr = out.log.terminal.mean_sq_dcorr;

    // Frozen-feature kNN over the taxonomies, fresh validation draws.
    const synth::LabeledDataset ds = world.make_dataset();
    const Matrix z_train = encoder.forward(ds.split_features(false));
    const synth::LabeledDataset val = world.sample_train_like(500, 3);
    const Matrix z_val = encoder.forward(val.features);
    out.shape_knn = knn_eval(z_train, ds.split_labels(ds.shape_id, false), z_val, val.shape_id,
                             cfg.knn_k);
    out.color_knn = knn_eval(z_train, ds.split_labels(ds.color_id, false), z_val, val.color_id,
                             cfg.knn_k);
    return out;
}

} // namespace adlab::apps
