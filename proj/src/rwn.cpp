#include "hawkfs/rwn.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hawkfs/exec.hpp"
#include "hawkfs/rng.hpp"

namespace hawkfs {

namespace {

constexpr int kMaxHidden = 1024;

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

void RwnConfig::validate() const {
    if (n_hidden < 1 || n_hidden > kMaxHidden) {
        throw std::invalid_argument("rwn: n_hidden must lie in [1, " +
                                    std::to_string(kMaxHidden) + "]");
    }
    if (!(weight_lo < weight_hi)) {
        throw std::invalid_argument("rwn: weight range lower bound must be below upper bound");
    }
}

Matrix hidden_activations(const RwnModel& model, const Matrix& x) {
    if (x.cols() != model.n_features) {
        throw std::invalid_argument("rwn: input has " + std::to_string(x.cols()) +
                                    " features, model expects " + std::to_string(model.n_features));
    }
    // Fixed row blocks keep the arithmetic identical for every thread count.
    constexpr Eigen::Index kBlock = 512;
    const Eigen::Index blocks = (x.rows() + kBlock - 1) / kBlock;
    Matrix h(x.rows(), model.input_weights.rows());
    exec::parallel_for(blocks, [&](std::int64_t b) {
        const Eigen::Index lo = static_cast<Eigen::Index>(b) * kBlock;
        const Eigen::Index rows = std::min(kBlock, x.rows() - lo);
        auto block = h.middleRows(lo, rows);
        block.noalias() = x.middleRows(lo, rows) * model.input_weights.transpose();
        for (Eigen::Index i = 0; i < rows; ++i) {
            for (Eigen::Index k = 0; k < block.cols(); ++k) {
                block(i, k) = sigmoid(block(i, k) + model.hidden_biases(k));
            }
        }
    });
    return h;
}

RwnModel rwn_train(const Matrix& x, std::span<const int> labels, int n_classes,
                   const RwnConfig& config) {
    config.validate();
    if (x.rows() == 0) throw std::invalid_argument("rwn: empty training set");
    if (static_cast<std::size_t>(x.rows()) != labels.size()) {
        throw std::invalid_argument("rwn: sample and label counts differ");
    }
    if (n_classes < 1) throw std::invalid_argument("rwn: need at least one class");

    RwnModel model;
    model.config = config;
    model.n_features = x.cols();
    model.n_classes = n_classes;

    Rng rng(config.seed);
    model.input_weights.resize(config.n_hidden, x.cols());
    for (Eigen::Index k = 0; k < config.n_hidden; ++k) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            model.input_weights(k, j) = rng.uniform(config.weight_lo, config.weight_hi);
        }
    }
    model.hidden_biases.resize(config.n_hidden);
    for (Eigen::Index k = 0; k < config.n_hidden; ++k) {
        model.hidden_biases(k) = rng.uniform(config.weight_lo, config.weight_hi);
    }

    const Matrix h = hidden_activations(model, x);

    Matrix targets = Matrix::Zero(x.rows(), n_classes);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        const int y = labels[static_cast<std::size_t>(i)];
        if (y < 0 || y >= n_classes) throw std::invalid_argument("rwn: label out of range");
        targets(i, y) = 1.0;
    }

    model.output_weights = linalg::lstsq_min_norm(h, targets);
    return model;
}

std::vector<int> rwn_predict(const RwnModel& model, const Matrix& x) {
    const Matrix scores = hidden_activations(model, x) * model.output_weights;
    std::vector<int> out(static_cast<std::size_t>(scores.rows()));
    exec::parallel_for(scores.rows(), [&](std::int64_t i) {
        int best = 0;
        for (int c = 1; c < model.n_classes; ++c) {
            if (scores(i, c) > scores(i, best)) best = c;
        }
        out[static_cast<std::size_t>(i)] = best;
    });
    return out;
}

namespace {

std::vector<double> to_row_major(const Matrix& m) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

Matrix from_row_major(const std::vector<double>& v, Eigen::Index rows, Eigen::Index cols) {
    if (static_cast<Eigen::Index>(v.size()) != rows * cols) {
        throw std::invalid_argument("rwn: serialized matrix size mismatch");
    }
    Matrix m(rows, cols);
    std::size_t at = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v[at++];
    return m;
}

}  // namespace

nlohmann::json rwn_to_json(const RwnModel& model, const std::vector<std::string>& class_names) {
    nlohmann::json j;
    j["n_hidden"] = model.config.n_hidden;
    j["n_features"] = model.n_features;
    j["n_classes"] = model.n_classes;
    j["seed"] = model.config.seed;
    j["weight_range"] = {model.config.weight_lo, model.config.weight_hi};
    j["activation"] = "sigmoid";
    j["input_weights"] = to_row_major(model.input_weights);
    j["hidden_biases"] = std::vector<double>(model.hidden_biases.begin(), model.hidden_biases.end());
    j["output_weights"] = to_row_major(model.output_weights);
    if (!class_names.empty()) j["class_names"] = class_names;
    return j;
}

RwnModel rwn_from_json(const nlohmann::json& j) {
    RwnModel model;
    model.config.n_hidden = j.at("n_hidden").get<int>();
    model.config.seed = j.at("seed").get<std::uint64_t>();
    model.config.weight_lo = j.at("weight_range").at(0).get<double>();
    model.config.weight_hi = j.at("weight_range").at(1).get<double>();
    model.n_features = j.at("n_features").get<Eigen::Index>();
    model.n_classes = j.at("n_classes").get<int>();
    model.input_weights = from_row_major(j.at("input_weights").get<std::vector<double>>(),
                                         model.config.n_hidden, model.n_features);
    const auto biases = j.at("hidden_biases").get<std::vector<double>>();
    model.hidden_biases = Eigen::Map<const Vector>(biases.data(),
                                                   static_cast<Eigen::Index>(biases.size()));
    model.output_weights = from_row_major(j.at("output_weights").get<std::vector<double>>(),
                                          model.config.n_hidden, model.n_classes);
    return model;
}

}  // namespace hawkfs
