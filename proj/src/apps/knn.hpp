#ifndef ADLAB_APPS_KNN_HPP
#define ADLAB_APPS_KNN_HPP

#include <vector>

#include "core/matrix.hpp"

namespace adlab::apps {

// Similarity-weighted nearest-neighbor votes over L2-normalized features
// (cosine similarity). Returns the predicted label per query row.
std::vector<int> knn_predict(const Matrix& train_feats, const std::vector<int>& train_labels,
                             const Matrix& query_feats, std::size_t k);

// Top-1 accuracy of the weighted vote against the query labels.
double knn_eval(const Matrix& train_feats, const std::vector<int>& train_labels,
                const Matrix& query_feats, const std::vector<int>& query_labels, std::size_t k);

} // namespace adlab::apps

#endif
