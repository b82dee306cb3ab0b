#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hawkfs/linalg.hpp"

namespace hawkfs {

// Pluggable learner used by the wrapper search. Implementations train on
// matrices already projected to the candidate's feature subset; n_hidden is
// the structure chosen by the optimizer and only matters to learners with a
// hidden layer. Additional classifiers (SVM, boosting, trees) plug in by
// implementing this interface and registering a factory.
class Classifier {
public:
    virtual ~Classifier() = default;
    virtual void train(const Matrix& x, std::span<const int> labels, int n_classes,
                       int n_hidden, std::uint64_t seed) = 0;
    virtual std::vector<int> predict(const Matrix& x) const = 0;
    virtual std::string name() const = 0;
};

using ClassifierFactory = std::function<std::unique_ptr<Classifier>()>;

// kind is "rwn" or "knn"
ClassifierFactory make_classifier_factory(const std::string& kind, int knn_k = 5);

}  // namespace hawkfs
