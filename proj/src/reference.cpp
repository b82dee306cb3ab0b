#include "hawkfs/reference.hpp"

#include <algorithm>
#include <cmath>

namespace hawkfs::reference {

Matrix hidden_activations(const Matrix& input_weights, const Vector& hidden_biases,
                          const Matrix& x) {
    Matrix h(x.rows(), input_weights.rows());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index k = 0; k < input_weights.rows(); ++k) {
            double z = hidden_biases(k);
            for (Eigen::Index j = 0; j < x.cols(); ++j) {
                z += input_weights(k, j) * x(i, j);
            }
            h(i, k) = 1.0 / (1.0 + std::exp(-z));
        }
    }
    return h;
}

std::vector<int> knn_predict(const Matrix& train, std::span<const int> labels, int k,
                             int n_classes, const Matrix& queries) {
    std::vector<int> out(static_cast<std::size_t>(queries.rows()));
    for (Eigen::Index q = 0; q < queries.rows(); ++q) {
        std::vector<std::pair<double, Eigen::Index>> dist;
        dist.reserve(static_cast<std::size_t>(train.rows()));
        for (Eigen::Index i = 0; i < train.rows(); ++i) {
            double d2 = 0.0;
            for (Eigen::Index j = 0; j < train.cols(); ++j) {
                const double diff = train(i, j) - queries(q, j);
                d2 += diff * diff;
            }
            dist.emplace_back(d2, i);
        }
        std::sort(dist.begin(), dist.end());
        std::vector<int> votes(static_cast<std::size_t>(n_classes), 0);
        for (int i = 0; i < k; ++i) {
            ++votes[static_cast<std::size_t>(labels[static_cast<std::size_t>(dist[static_cast<std::size_t>(i)].second)])];
        }
        int winner = 0;
        for (int c = 1; c < n_classes; ++c) {
            if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(winner)]) {
                winner = c;
            }
        }
        out[static_cast<std::size_t>(q)] = winner;
    }
    return out;
}

Matrix normal_equation_solve(const Matrix& a, const Matrix& b) {
    return (a.transpose() * a).ldlt().solve(a.transpose() * b);
}

}  // namespace hawkfs::reference
