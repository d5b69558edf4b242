#ifndef ADLAB_SYNTH_SHAPES_HPP
#define ADLAB_SYNTH_SHAPES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "nn/mlp.hpp"

namespace adlab::synth {

// Colored-shapes world: two latent attributes, shape ∈ {square, triangle}
// and color ∈ {red, green, blue}. A sample's code is the one-hot pair with
// per-sample intensity modulation on each attribute slot (the tabular
// stand-in for pose/lighting variation within a class); the code goes
// through a fixed seeded 2-layer GELU embedding into R^m and picks up
// isotropic Gaussian noise. Within-class content is what gives the
// adversarial game something beyond the class to decorrelate.
//
// Train split: classes 0=(square,red), 1=(triangle,green),
// 2=(triangle,blue), balanced. Heldout split: the excluded combination
// (triangle, red), class label −1. The class is recoverable from color
// alone, which is exactly the shortcut a plain classifier takes.
inline constexpr int kShapeSquare = 0;
inline constexpr int kShapeTriangle = 1;
inline constexpr int kColorRed = 0;
inline constexpr int kColorGreen = 1;
inline constexpr int kColorBlue = 2;
inline constexpr int kHeldoutClass = -1;

struct LabeledDataset {
    Matrix features;              // n×m
    std::vector<int> shape_id;    // attribute labels
    std::vector<int> color_id;
    std::vector<int> class_id;    // −1 on the heldout split
    std::vector<int> is_heldout;  // split tag per row: 0 train, 1 heldout

    std::size_t size() const { return features.rows(); }

    // Row indices of one split, in order.
    std::vector<std::size_t> split_rows(bool heldout) const;
    Matrix split_features(bool heldout) const;
    std::vector<int> split_labels(const std::vector<int>& column, bool heldout) const;
};

struct ShapesConfig {
    std::size_t n_per_class = 2000;
    double noise_sigma = 0.1;
    double intensity = 0.3;       // within-class modulation amplitude
    std::size_t embed_dim = 16;   // m
    std::size_t embed_hidden = 32;
    std::uint64_t seed = 0;
    // Offsets the noise/sampling streams while keeping the embedding net
    // fixed, for fresh draws from the same world (evaluation queries,
    // SSL views).
    std::uint64_t variant = 0;
};

class ShapesWorld {
public:
    explicit ShapesWorld(const ShapesConfig& cfg);

    // Embedding of one attribute pair at nominal intensity.
    std::vector<double> center(int shape, int color) const;
    // One sample: modulated code through the embedding plus noise.
    void sample_into(Matrix& out, std::size_t row, int shape, int color, Rng& rng) const;

    LabeledDataset make_dataset() const;
    // A view pair for SSL: same attribute draws, independent noise.
    std::pair<Matrix, Matrix> sample_train_views(std::size_t n, Rng& rng) const;
    // Fresh train-distribution features + attribute labels (evaluation).
    LabeledDataset sample_train_like(std::size_t n_per_class, std::uint64_t stream_offset) const;

    const ShapesConfig& config() const { return cfg_; }

private:
    ShapesConfig cfg_;
    nn::Mlp embed_;
    std::vector<double> centers_[2][3]; // [shape][color]
};

LabeledDataset gen_shapes_dataset(std::size_t n_per_class, double noise_sigma,
                                  std::size_t embed_dim, std::uint64_t seed);

// CSV export with a documented header: features, shape_id, color_id,
// class_id, split.
void write_dataset_csv(const LabeledDataset& ds, const std::string& path);

} // namespace adlab::synth

#endif
