#pragma once

#include <span>
#include <vector>

#include "hawkfs/linalg.hpp"

namespace hawkfs {

// Lazy learner: stores the training data verbatim and votes among the k
// nearest neighbors at prediction time.
struct KnnModel {
    Matrix train_features;
    std::vector<int> train_labels;
    int k = 5;
    int n_classes = 0;
};

KnnModel knn_train(const Matrix& x, std::span<const int> labels, int n_classes, int k);

// Majority vote over the k nearest neighbors by squared Euclidean distance.
// Equal distances prefer the lower training index; vote ties the lowest
// class id. Queries run on the OpenMP pool.
std::vector<int> knn_predict(const KnnModel& model, const Matrix& x);

}  // namespace hawkfs
