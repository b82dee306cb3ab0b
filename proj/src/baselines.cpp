#include "hawkfs/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "hawkfs/exec.hpp"

namespace hawkfs {

KnnModel knn_train(const Matrix& x, std::span<const int> labels, int n_classes, int k) {
    if (k < 1) throw std::invalid_argument("knn: k must be positive");
    if (static_cast<Eigen::Index>(k) > x.rows()) {
        throw std::invalid_argument("knn: k exceeds the number of training samples");
    }
    if (static_cast<std::size_t>(x.rows()) != labels.size()) {
        throw std::invalid_argument("knn: sample and label counts differ");
    }
    return {x, {labels.begin(), labels.end()}, k, n_classes};
}

std::vector<int> knn_predict(const KnnModel& model, const Matrix& x) {
    if (x.cols() != model.train_features.cols()) {
        throw std::invalid_argument("knn: query feature count does not match training data");
    }
    const Eigen::Index n_train = model.train_features.rows();
    const auto k = static_cast<std::size_t>(model.k);

    std::vector<int> out(static_cast<std::size_t>(x.rows()));
    exec::parallel_for(x.rows(), [&](std::int64_t q) {
        std::vector<std::pair<double, Eigen::Index>> dist(static_cast<std::size_t>(n_train));
        for (Eigen::Index i = 0; i < n_train; ++i) {
            dist[static_cast<std::size_t>(i)] = {
                (model.train_features.row(i) - x.row(q)).squaredNorm(), i};
        }
        std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());

        std::vector<int> votes(static_cast<std::size_t>(std::max(model.n_classes, 1)), 0);
        for (std::size_t i = 0; i < k; ++i) {
            const int y = model.train_labels[static_cast<std::size_t>(dist[i].second)];
            if (y >= static_cast<int>(votes.size())) votes.resize(static_cast<std::size_t>(y) + 1, 0);
            ++votes[static_cast<std::size_t>(y)];
        }
        int winner = 0;
        for (int c = 1; c < static_cast<int>(votes.size()); ++c) {
            if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(winner)]) {
                winner = c;
            }
        }
        out[static_cast<std::size_t>(q)] = winner;
    });
    return out;
}

}  // namespace hawkfs
