#include "apps/classify.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "apps/knn.hpp"
#include "game/losses.hpp"

namespace adlab::apps {

namespace {

// Softmax cross-entropy head over the raw encoder output.
class SoftmaxHeadTask : public game::TaskModel {
public:
    SoftmaxHeadTask(std::size_t in_dim, std::size_t classes, Rng& rng)
        : head_(nn::Mlp::make({in_dim, classes}, nn::Activation::identity, rng)) {}

    double loss_and_grad(const game::Batch& batch, const Matrix& z, Matrix& dz) override {
        nn::MlpCache cache;
        const Matrix logits = head_.forward_cached(z, cache);
        Matrix dlogits;
        const double loss = game::cross_entropy_grad(logits, batch.labels, dlogits);
        dz = head_.backward(cache, dlogits);
        return loss;
    }

    std::vector<nn::ParamRef> param_refs() override { return head_.param_refs(); }
    void zero_grad() override { head_.zero_grad(); }

    const nn::Mlp& head() const { return head_; }

private:
    nn::Mlp head_;
};

std::vector<int> argmax_rows(const Matrix& logits) {
    std::vector<int> out(logits.rows());
    for (std::size_t r = 0; r < logits.rows(); ++r) {
        const auto row = logits.row(r);
        std::size_t best = 0;
        for (std::size_t c = 1; c < logits.cols(); ++c)
            if (row[c] > row[best]) best = c;
        out[r] = static_cast<int>(best);
    }
    return out;
}

} // namespace

ClassifyOutcome train_classifier(const ClassifyConfig& cfg) {
    synth::ShapesConfig world_cfg;
    world_cfg.n_per_class = cfg.n_per_class;
    world_cfg.noise_sigma = cfg.noise_sigma;
    world_cfg.intensity = cfg.intensity;
    world_cfg.embed_dim = cfg.feature_dim;
    world_cfg.seed = cfg.seed;
    const synth::ShapesWorld world(world_cfg);
    const synth::LabeledDataset ds = world.make_dataset();

    const Matrix train_x = ds.split_features(false);
    const std::vector<int> train_class = ds.split_labels(ds.class_id, false);
    const std::size_t n_train = train_x.rows();

    game::AdminConfig game_cfg;
    game_cfg.formulation = cfg.formulation;
    game_cfg.distance = cfg.distance;
    game_cfg.alpha = cfg.alpha;
    game_cfg.lambda = cfg.use_admin ? cfg.lambda : 0.0;
    game_cfg.k = cfg.k;
    game_cfg.steps = cfg.steps;
    game_cfg.batch = cfg.batch;
    game_cfg.dim = cfg.embed_dim;
    game_cfg.seed = cfg.seed;
    game_cfg.encoder_opt.kind = nn::OptimizerKind::sgd_momentum;
    game_cfg.encoder_opt.momentum = cfg.momentum;
    game_cfg.encoder_opt.weight_decay = cfg.weight_decay;
    game_cfg.predictor_opt.kind = cfg.predictor_opt;
    game_cfg.predictor_opt.momentum = cfg.momentum;
    game_cfg.encoder_lr = cfg.encoder_lr;
    game_cfg.predictor_lr = cfg.predictor_lr;
    game_cfg.schedule = nn::ScheduleKind::cosine_with_warmup;
    game_cfg.warmup_steps = cfg.warmup;
    game_cfg.dcorr_interval = cfg.dcorr_interval;
    game_cfg.eval_batch = 1024;

    const game::BatchFn data = [&train_x, &train_class, n_train](Rng& rng, std::size_t n) {
        game::Batch b;
        b.x = Matrix(n, train_x.cols());
        b.labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t idx = rng.next_below(n_train);
            const auto src = train_x.row(idx);
            auto dst = b.x.row(i);
            std::copy(src.begin(), src.end(), dst.begin());
            b.labels[i] = train_class[idx];
        }
        return b;
    };

    Rng enc_rng(cfg.seed, streams::kEncoderInit);
    game::MlpEncoder encoder(nn::Mlp::make({cfg.feature_dim, cfg.hidden, cfg.embed_dim},
                                           nn::Activation::gelu, enc_rng));
    Rng bank_rng(cfg.seed, streams::kBankInit);
    game::PredictorBank bank(cfg.embed_dim, {cfg.bank_hidden, 2, nn::Activation::gelu}, bank_rng);
    Rng head_rng(cfg.seed, streams::kTaskInit);
    SoftmaxHeadTask task(cfg.embed_dim, 3, head_rng);

    ClassifyOutcome out;
    out.log = game::admin_train(encoder, bank, data, &task, game_cfg);
    out.aborted = out.log.aborted;
    if (out.aborted) return out;

    out.mean_sq_dcorr = out.log.terminal.mean_sq_dcorr;
    out.final_mean_norm = out.log.final_mean_norm;

    const Matrix z_train = encoder.forward(train_x);
    const Matrix logits = task.head().forward(z_train);
    const std::vector<int> pred = argmax_rows(logits);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (pred[i] == train_class[i]) ++correct;
    out.train_accuracy = static_cast<double>(correct) / static_cast<double>(pred.size());

    const Matrix held_x = ds.split_features(true);
    const Matrix z_held = encoder.forward(held_x);
    out.shape_knn = knn_eval(z_train, ds.split_labels(ds.shape_id, false), z_held,
                             ds.split_labels(ds.shape_id, true), cfg.knn_k);
    out.color_knn = knn_eval(z_train, ds.split_labels(ds.color_id, false), z_held,
                             ds.split_labels(ds.color_id, true), cfg.knn_k);
    const std::vector<int> held_vote = knn_predict(z_train, train_class, z_held, cfg.knn_k);
    std::size_t as_class0 = 0;
    for (int v : held_vote)
        if (v == 0) ++as_class0;
    out.heldout_as_class0 = static_cast<double>(as_class0) / static_cast<double>(held_vote.size());
    return out;
}

std::vector<MarginSweepRow> sweep_margin(const std::vector<double>& alphas,
                                         const ClassifyConfig& cfg, std::size_t max_threads) {
    std::vector<MarginSweepRow> rows(alphas.size());
    auto run_one = [&](std::size_t idx) {
        ClassifyConfig c = cfg;
        c.formulation = game::Formulation::margin;
        if (alphas[idx] <= 0.0) {
            // α = 0: the hinge is identically zero, so run the exact λ·0
            // path the baseline uses (alpha itself becomes inert).
            c.use_admin = false;
        } else {
            c.use_admin = true;
            c.alpha = alphas[idx];
        }
        const ClassifyOutcome o = train_classifier(c);
        rows[idx] = {alphas[idx], o.shape_knn, o.mean_sq_dcorr, o.aborted};
    };

    if (max_threads <= 1) {
        for (std::size_t i = 0; i < alphas.size(); ++i) run_one(i);
        return rows;
    }
    std::size_t next = 0;
    const std::size_t n_workers = std::min(max_threads, alphas.size());
    std::vector<std::thread> pool;
    std::mutex mtx;
    for (std::size_t w = 0; w < n_workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                std::size_t idx;
                {
                    std::lock_guard<std::mutex> lock(mtx);
                    if (next >= alphas.size()) return;
                    idx = next++;
                }
                run_one(idx);
            }
        });
    }
    for (auto& t : pool) t.join();
    return rows;
}

std::vector<AblationRow> ablate_formulations(const ClassifyConfig& cfg) {
    struct Mode {
        const char* name;
        game::Formulation formulation;
        game::Distance distance;
        std::size_t k;
    };
    // The standardized game needs the extra predictor step to keep up.
    const Mode modes[3] = {
        {"standardized", game::Formulation::standardized, game::Distance::l2_squared, 2},
        {"margin", game::Formulation::margin, game::Distance::l1, 1},
        {"neither", game::Formulation::raw, game::Distance::l2_squared, 1},
    };
    std::vector<AblationRow> rows;
    rows.reserve(3);
    for (const Mode& mode : modes) {
        ClassifyConfig c = cfg;
        c.use_admin = true;
        c.formulation = mode.formulation;
        c.distance = mode.distance;
        c.k = mode.k;
        const ClassifyOutcome o = train_classifier(c);
        AblationRow row;
        row.name = mode.name;
        row.shape_knn = o.shape_knn;
        row.color_knn = o.color_knn;
        row.mean_sq_dcorr = o.mean_sq_dcorr;
        row.final_mean_norm = o.final_mean_norm;
        row.aborted = o.aborted;
        rows.push_back(row);
    }
    return rows;
}

} // namespace adlab::apps
