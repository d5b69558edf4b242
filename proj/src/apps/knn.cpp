#include "apps/knn.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "core/error.hpp"

namespace adlab::apps {

namespace {

Matrix l2_normalize_rows(const Matrix& m) {
    Matrix out = m;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        auto row = out.row(r);
        double norm = 0.0;
        for (double v : row) norm += v * v;
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (double& v : row) v /= norm;
    }
    return out;
}

} // namespace

std::vector<int> knn_predict(const Matrix& train_feats, const std::vector<int>& train_labels,
                             const Matrix& query_feats, std::size_t k) {
    if (k < 1) throw ConfigError("knn: k must be >= 1");
    if (k > train_feats.rows()) throw ConfigError("knn: k exceeds training set size");
    if (train_feats.rows() != train_labels.size()) throw ConfigError("knn: label count mismatch");
    if (train_feats.cols() != query_feats.cols()) throw ConfigError("knn: feature width mismatch");

    const Matrix train = l2_normalize_rows(train_feats);
    const Matrix query = l2_normalize_rows(query_feats);
    const std::size_t n = train.rows();

    std::vector<int> pred(query.rows());
    std::vector<std::pair<double, std::size_t>> sims(n);
    for (std::size_t q = 0; q < query.rows(); ++q) {
        const auto qrow = query.row(q);
        for (std::size_t i = 0; i < n; ++i) {
            const auto trow = train.row(i);
            double s = 0.0;
            for (std::size_t c = 0; c < train.cols(); ++c) s += qrow[c] * trow[c];
            sims[i] = {s, i};
        }
        // Ties break on the training index so results never depend on
        // sort internals.
        std::partial_sort(sims.begin(), sims.begin() + static_cast<std::ptrdiff_t>(k), sims.end(),
                          [](const auto& a, const auto& b) {
                              if (a.first != b.first) return a.first > b.first;
                              return a.second < b.second;
                          });
        std::map<int, double> votes;
        for (std::size_t j = 0; j < k; ++j)
            votes[train_labels[sims[j].second]] += std::max(sims[j].first, 0.0);
        int best = votes.begin()->first;
        double best_w = votes.begin()->second;
        for (const auto& [label, w] : votes)
            if (w > best_w) {
                best = label;
                best_w = w;
            }
        pred[q] = best;
    }
    return pred;
}

double knn_eval(const Matrix& train_feats, const std::vector<int>& train_labels,
                const Matrix& query_feats, const std::vector<int>& query_labels, std::size_t k) {
    if (query_feats.rows() != query_labels.size())
        throw ConfigError("knn_eval: query label count mismatch");
    const std::vector<int> pred = knn_predict(train_feats, train_labels, query_feats, k);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (pred[i] == query_labels[i]) ++correct;
    return static_cast<double>(correct) / static_cast<double>(pred.size());
}

} // namespace adlab::apps
