#include "synth/shapes.hpp"

#include <fstream>

#include "core/error.hpp"
#include "io/csv.hpp"

namespace adlab::synth {

namespace {
constexpr std::size_t kOneHotDim = 5; // 2 shapes + 3 colors

struct TrainCombo {
    int shape;
    int color;
};
constexpr TrainCombo kTrainCombos[3] = {
    {kShapeSquare, kColorRed}, {kShapeTriangle, kColorGreen}, {kShapeTriangle, kColorBlue}};
} // namespace

std::vector<std::size_t> LabeledDataset::split_rows(bool heldout) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < size(); ++i)
        if ((is_heldout[i] != 0) == heldout) rows.push_back(i);
    return rows;
}

Matrix LabeledDataset::split_features(bool heldout) const {
    const auto rows = split_rows(heldout);
    Matrix out(rows.size(), features.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto src = features.row(rows[i]);
        auto dst = out.row(i);
        for (std::size_t c = 0; c < features.cols(); ++c) dst[c] = src[c];
    }
    return out;
}

std::vector<int> LabeledDataset::split_labels(const std::vector<int>& column, bool heldout) const {
    const auto rows = split_rows(heldout);
    std::vector<int> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = column[rows[i]];
    return out;
}

ShapesWorld::ShapesWorld(const ShapesConfig& cfg) : cfg_(cfg) {
    if (cfg_.embed_dim < 8) throw ConfigError("ShapesWorld: embed_dim must be >= 8");
    // The embedding net depends on the seed only, never the variant, so
    // all draws from one seed live in the same feature geometry.
    Rng embed_rng(cfg_.seed, streams::kEmbed);
    embed_ = nn::Mlp::make({kOneHotDim, cfg_.embed_hidden, cfg_.embed_dim}, nn::Activation::gelu,
                           embed_rng);
    for (int s = 0; s < 2; ++s)
        for (int c = 0; c < 3; ++c) {
            Matrix onehot(1, kOneHotDim);
            onehot(0, static_cast<std::size_t>(s)) = 1.0;
            onehot(0, 2 + static_cast<std::size_t>(c)) = 1.0;
            const Matrix out = embed_.forward(onehot);
            const auto row = out.row(0);
            centers_[s][c].assign(row.begin(), row.end());
        }
}

std::vector<double> ShapesWorld::center(int shape, int color) const {
    return centers_[shape][color];
}

void ShapesWorld::sample_into(Matrix& out, std::size_t row, int shape, int color, Rng& rng) const {
    Matrix code(1, kOneHotDim);
    code(0, static_cast<std::size_t>(shape)) = 1.0 + cfg_.intensity * rng.normal();
    code(0, 2 + static_cast<std::size_t>(color)) = 1.0 + cfg_.intensity * rng.normal();
    const Matrix embedded = embed_.forward(code);
    const auto src = embedded.row(0);
    auto dst = out.row(row);
    for (std::size_t j = 0; j < src.size(); ++j) dst[j] = src[j] + cfg_.noise_sigma * rng.normal();
}

LabeledDataset ShapesWorld::make_dataset() const {
    const std::size_t n_train = 3 * cfg_.n_per_class;
    const std::size_t n_held = cfg_.n_per_class;
    LabeledDataset ds;
    ds.features = Matrix(n_train + n_held, cfg_.embed_dim);
    ds.shape_id.resize(n_train + n_held);
    ds.color_id.resize(n_train + n_held);
    ds.class_id.resize(n_train + n_held);
    ds.is_heldout.resize(n_train + n_held);

    Rng noise_rng(cfg_.seed, streams::kNoise + 16 * cfg_.variant);
    std::size_t row = 0;
    for (int cls = 0; cls < 3; ++cls) {
        const TrainCombo combo = kTrainCombos[cls];
        for (std::size_t i = 0; i < cfg_.n_per_class; ++i, ++row) {
            sample_into(ds.features, row, combo.shape, combo.color, noise_rng);
            ds.shape_id[row] = combo.shape;
            ds.color_id[row] = combo.color;
            ds.class_id[row] = cls;
            ds.is_heldout[row] = 0;
        }
    }
    for (std::size_t i = 0; i < n_held; ++i, ++row) {
        sample_into(ds.features, row, kShapeTriangle, kColorRed, noise_rng);
        ds.shape_id[row] = kShapeTriangle;
        ds.color_id[row] = kColorRed;
        ds.class_id[row] = kHeldoutClass;
        ds.is_heldout[row] = 1;
    }
    return ds;
}

std::pair<Matrix, Matrix> ShapesWorld::sample_train_views(std::size_t n, Rng& rng) const {
    Matrix a(n, cfg_.embed_dim), b(n, cfg_.embed_dim);
    for (std::size_t i = 0; i < n; ++i) {
        const TrainCombo combo = kTrainCombos[rng.next_below(3)];
        sample_into(a, i, combo.shape, combo.color, rng);
        sample_into(b, i, combo.shape, combo.color, rng);
    }
    return {std::move(a), std::move(b)};
}

LabeledDataset ShapesWorld::sample_train_like(std::size_t n_per_class,
                                              std::uint64_t stream_offset) const {
    LabeledDataset ds;
    const std::size_t n = 3 * n_per_class;
    ds.features = Matrix(n, cfg_.embed_dim);
    ds.shape_id.resize(n);
    ds.color_id.resize(n);
    ds.class_id.resize(n);
    ds.is_heldout.assign(n, 0);
    Rng rng(cfg_.seed, streams::kNoise + 1000 + stream_offset);
    std::size_t row = 0;
    for (int cls = 0; cls < 3; ++cls) {
        const TrainCombo combo = kTrainCombos[cls];
        for (std::size_t i = 0; i < n_per_class; ++i, ++row) {
            sample_into(ds.features, row, combo.shape, combo.color, rng);
            ds.shape_id[row] = combo.shape;
            ds.color_id[row] = combo.color;
            ds.class_id[row] = cls;
        }
    }
    return ds;
}

LabeledDataset gen_shapes_dataset(std::size_t n_per_class, double noise_sigma,
                                  std::size_t embed_dim, std::uint64_t seed) {
    ShapesConfig cfg;
    cfg.n_per_class = n_per_class;
    cfg.noise_sigma = noise_sigma;
    cfg.embed_dim = embed_dim;
    cfg.seed = seed;
    return ShapesWorld(cfg).make_dataset();
}

void write_dataset_csv(const LabeledDataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write dataset CSV: " + path);
    for (std::size_t c = 0; c < ds.features.cols(); ++c) out << 'f' << c << ',';
    out << "shape_id,color_id,class_id,split\n";
    for (std::size_t r = 0; r < ds.size(); ++r) {
        for (double v : ds.features.row(r)) out << io::format_double(v) << ',';
        out << ds.shape_id[r] << ',' << ds.color_id[r] << ',' << ds.class_id[r] << ','
            << (ds.is_heldout[r] ? "heldout" : "train") << '\n';
    }
}

} // namespace adlab::synth
