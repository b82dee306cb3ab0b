#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hawkfs/reference.hpp"
#include "hawkfs/rng.hpp"
#include "hawkfs/rwn.hpp"
#include "hawkfs/synthetic.hpp"

using namespace hawkfs;

namespace {

Matrix random_matrix(Eigen::Index m, Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix a(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = rng.uniform();
    return a;
}

Matrix one_hot(std::span<const int> labels, int n_classes) {
    Matrix t = Matrix::Zero(static_cast<Eigen::Index>(labels.size()), n_classes);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        t(static_cast<Eigen::Index>(i), labels[i]) = 1.0;
    }
    return t;
}

}  // namespace

TEST_CASE("zero weights and biases activate at exactly one half") {
    RwnModel model;
    model.input_weights = Matrix::Zero(3, 2);
    model.hidden_biases = Vector::Zero(3);
    model.n_features = 2;
    const Matrix h = hidden_activations(model, random_matrix(5, 2, 1));
    CHECK((h.array() == 0.5).all());
}

TEST_CASE("an orthogonal input activates a single neuron at one half") {
    RwnModel model;
    model.input_weights.resize(1, 2);
    model.input_weights << 1.0, 0.0;
    model.hidden_biases = Vector::Zero(1);
    model.n_features = 2;
    Matrix x(1, 2);
    x << 0.0, 5.0;
    CHECK(hidden_activations(model, x)(0, 0) == 0.5);
}

TEST_CASE("hidden activations match an independent sigmoid-affine computation") {
    RwnConfig cfg;
    cfg.n_hidden = 4;
    cfg.seed = 99;
    const Matrix x = random_matrix(3, 2, 2);
    const std::vector<int> y{0, 1, 0};
    const RwnModel model = rwn_train(x, y, 2, cfg);
    const Matrix expected =
        reference::hidden_activations(model.input_weights, model.hidden_biases, x);
    const Matrix actual = hidden_activations(model, x);
    CHECK((expected - actual).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(actual.minCoeff() > 0.0);
    CHECK(actual.maxCoeff() < 1.0);
}

TEST_CASE("training reduces to the plain inverse when H is square and regular") {
    // one sample per hidden neuron makes H square; random sigmoid H of this
    // size is invertible in practice
    RwnConfig cfg;
    cfg.n_hidden = 6;
    cfg.seed = 5;
    const Matrix x = random_matrix(6, 3, 31);
    const std::vector<int> y{0, 1, 2, 0, 1, 2};
    const RwnModel model = rwn_train(x, y, 3, cfg);
    const Matrix h = hidden_activations(model, x);
    REQUIRE(std::abs(h.determinant()) > 1e-12);
    const Matrix direct = h.inverse() * one_hot(y, 3);
    CHECK((model.output_weights - direct).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("two separable classes train to zero error") {
    const Dataset d = synthetic::two_blobs(100, 2, 6.0, 8);
    RwnConfig cfg;
    cfg.n_hidden = 50;
    cfg.seed = 4;
    const RwnModel model = rwn_train(d.features, d.labels, 2, cfg);
    const std::vector<int> pred = rwn_predict(model, d.features);
    CHECK(pred == d.labels);

    // cross-check against an algebraically different least-squares route:
    // H is numerically rank-deficient here, so minimisers need not match
    // coefficient-wise, but their residuals must
    const Matrix h = hidden_activations(model, d.features);
    const Matrix t = one_hot(d.labels, 2);
    const Matrix alt = reference::normal_equation_solve(h, t);
    CHECK((h * model.output_weights - t).norm() <= (h * alt - t).norm() + 1e-9);
    const double stationarity =
        (h.transpose() * (h * model.output_weights - t)).norm() / (h.transpose() * t).norm();
    CHECK(stationarity < 1e-8);
}

TEST_CASE("duplicate samples keep the solve well-posed") {
    Matrix x = random_matrix(40, 3, 12);
    for (int i = 0; i < 10; ++i) x.row(30 + i) = x.row(i);  // rank-deficient H
    std::vector<int> y;
    for (int i = 0; i < 40; ++i) y.push_back(i % 2);
    RwnConfig cfg;
    cfg.n_hidden = 48;  // wider than the sample count
    cfg.seed = 3;
    const RwnModel model = rwn_train(x, y, 2, cfg);
    const Matrix h = hidden_activations(model, x);
    const Matrix t = one_hot(y, 2);
    const double residual = (h.transpose() * (h * model.output_weights - t)).norm() /
                            (h.transpose() * t).norm();
    CHECK(residual < 1e-8);
}

TEST_CASE("prediction breaks score ties toward the lower class id") {
    RwnModel model;
    model.input_weights = Matrix::Zero(1, 1);
    model.hidden_biases = Vector::Zero(1);
    model.output_weights.resize(1, 2);
    model.output_weights << 1.8, 1.8;  // equal scores for both classes
    model.n_features = 1;
    model.n_classes = 2;
    const std::vector<int> pred = rwn_predict(model, Matrix::Zero(1, 1));
    CHECK(pred == std::vector<int>{0});
}

TEST_CASE("single-class training data predicts that class everywhere") {
    RwnConfig cfg;
    cfg.n_hidden = 8;
    cfg.seed = 6;
    const Matrix x = random_matrix(20, 2, 41);
    const std::vector<int> y(20, 0);
    const RwnModel model = rwn_train(x, y, 1, cfg);
    const std::vector<int> pred = rwn_predict(model, random_matrix(10, 2, 42));
    CHECK(pred == std::vector<int>(10, 0));
}

TEST_CASE("training is bit-deterministic and never touches the hidden layer") {
    const Dataset d = synthetic::two_blobs(30, 3, 3.0, 2);
    RwnConfig cfg;
    cfg.n_hidden = 16;
    cfg.seed = 123;
    const RwnModel a = rwn_train(d.features, d.labels, 2, cfg);
    const RwnModel b = rwn_train(d.features, d.labels, 2, cfg);
    CHECK(a.input_weights == b.input_weights);
    CHECK(a.hidden_biases == b.hidden_biases);
    CHECK(a.output_weights == b.output_weights);

    // the drawn hidden layer is exactly what an identical stream produces
    Rng rng(cfg.seed);
    for (Eigen::Index k = 0; k < a.input_weights.rows(); ++k) {
        for (Eigen::Index j = 0; j < a.input_weights.cols(); ++j) {
            CHECK(a.input_weights(k, j) == rng.uniform(-1.0, 1.0));
        }
    }
    for (Eigen::Index k = 0; k < a.hidden_biases.size(); ++k) {
        CHECK(a.hidden_biases(k) == rng.uniform(-1.0, 1.0));
    }
}

TEST_CASE("interpolation regime reaches zero training error") {
    Rng rng(9);
    for (const std::uint64_t seed : {10u, 11u, 12u}) {
        const Matrix x = random_matrix(25, 4, seed);
        std::vector<int> y;
        for (int i = 0; i < 25; ++i) y.push_back(static_cast<int>(rng.uniform_int(3)));
        RwnConfig cfg;
        cfg.n_hidden = 40;  // at least as many neurons as samples
        cfg.seed = seed;
        const RwnModel model = rwn_train(x, y, 3, cfg);
        CHECK(rwn_predict(model, x) == y);
    }
}

TEST_CASE("perturbing the trained output weights never improves the residual") {
    const Matrix x = random_matrix(60, 4, 77);
    std::vector<int> y;
    for (int i = 0; i < 60; ++i) y.push_back(i % 2);
    RwnConfig cfg;
    cfg.n_hidden = 12;
    cfg.seed = 8;
    const RwnModel model = rwn_train(x, y, 2, cfg);
    const Matrix h = hidden_activations(model, x);
    const Matrix t = one_hot(y, 2);
    const double base = (h * model.output_weights - t).norm();

    Rng rng(200);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix delta(model.output_weights.rows(), model.output_weights.cols());
        for (Eigen::Index i = 0; i < delta.rows(); ++i)
            for (Eigen::Index j = 0; j < delta.cols(); ++j) delta(i, j) = rng.normal();
        delta *= 1e-3 * model.output_weights.norm() / delta.norm();
        CHECK((h * (model.output_weights + delta) - t).norm() >= base);
    }
}

TEST_CASE("config validation enforces the documented bounds") {
    RwnConfig cfg;
    cfg.n_hidden = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.n_hidden = 1025;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.n_hidden = 4;
    cfg.weight_lo = 1.0;
    cfg.weight_hi = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK_THROWS_AS((void)rwn_train(Matrix(), {}, 1, RwnConfig{}), std::invalid_argument);
}

TEST_CASE("models reload from json and predict bit-identically") {
    const Dataset d = synthetic::two_blobs(40, 3, 2.0, 6);
    RwnConfig cfg;
    cfg.n_hidden = 10;
    cfg.seed = 55;
    const RwnModel model = rwn_train(d.features, d.labels, 2, cfg);
    const nlohmann::json j = rwn_to_json(model, d.class_names);
    const RwnModel back = rwn_from_json(j);
    CHECK(back.input_weights == model.input_weights);
    CHECK(back.hidden_biases == model.hidden_biases);
    CHECK(back.output_weights == model.output_weights);
    const Matrix probe = random_matrix(15, 3, 60);
    CHECK(rwn_predict(back, probe) == rwn_predict(model, probe));
    CHECK(j.at("class_names").get<std::vector<std::string>>() == d.class_names);
}
